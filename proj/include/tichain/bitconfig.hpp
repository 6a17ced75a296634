#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "tichain/errors.hpp"

namespace tichain {

inline constexpr int kMinSites = 2;
inline constexpr int kMaxSites = 24;

// One computational-basis configuration of a ring of n_sites qubits, packed
// into an unsigned word.  Site 1 is the most significant of the n_sites bits
// and site N the least significant, so "100" corresponds to the integer 4
// for N = 3.  Translation by one step moves the content of site i to site
// i + 1 (indices mod N), i.e. a cyclic right rotation of the bit pattern.
class BitConfig {
public:
    BitConfig() = default;

    BitConfig(int n_sites, std::uint32_t bits) : n_sites_(n_sites), bits_(bits) {
        if (n_sites < kMinSites || n_sites > kMaxSites)
            throw SizeError("site count " + std::to_string(n_sites) +
                            " outside supported range [" + std::to_string(kMinSites) +
                            ", " + std::to_string(kMaxSites) + "]");
        if (bits >> n_sites)
            throw SizeError("configuration value " + std::to_string(bits) +
                            " does not fit in " + std::to_string(n_sites) + " sites");
    }

    int n_sites() const noexcept { return n_sites_; }
    std::uint32_t bits() const noexcept { return bits_; }

    // 1-based site access; site 1 is the leftmost character of the string form.
    bool site(int i) const { return (bits_ >> (n_sites_ - i)) & 1u; }

    int weight() const noexcept { return std::popcount(bits_); }

    std::uint32_t mask() const noexcept {
        return (n_sites_ == 32) ? ~0u : ((1u << n_sites_) - 1u);
    }

    friend bool operator==(const BitConfig&, const BitConfig&) = default;

    // Orders by site count first so mixed-size containers stay coherent;
    // within one size this is plain integer order on the packed bits.
    friend auto operator<=>(const BitConfig& a, const BitConfig& b) {
        if (auto c = a.n_sites_ <=> b.n_sites_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    int n_sites_ = 0;
    std::uint32_t bits_ = 0;
};

// Cyclic right rotation by `steps` (negative steps rotate left).
inline BitConfig translate(BitConfig s, int steps = 1) {
    const int n = s.n_sites();
    int r = steps % n;
    if (r < 0) r += n;
    if (r == 0) return s;
    const std::uint32_t b = s.bits() & s.mask();
    const std::uint32_t rotated = ((b >> r) | (b << (n - r))) & s.mask();
    return BitConfig(n, rotated);
}

inline BitConfig complement_of(BitConfig s) {
    return BitConfig(s.n_sites(), ~s.bits() & s.mask());
}

// Smallest divisor d of N with T^d(s) = s; always divides N.
inline int period_of_string(BitConfig s) {
    const int n = s.n_sites();
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        if (translate(s, d) == s) return d;
    }
    return n;
}

// Lexicographically smallest rotation, i.e. the smallest packed integer
// among all cyclic shifts.  Used as the canonical orbit representative.
inline BitConfig canonical_rotation(BitConfig s) {
    BitConfig best = s;
    BitConfig cur = s;
    for (int j = 1; j < s.n_sites(); ++j) {
        cur = translate(cur, 1);
        if (cur < best) best = cur;
    }
    return best;
}

inline std::string to_string(BitConfig s) {
    std::string out(static_cast<std::size_t>(s.n_sites()), '0');
    for (int i = 1; i <= s.n_sites(); ++i)
        if (s.site(i)) out[static_cast<std::size_t>(i - 1)] = '1';
    return out;
}

// Parses a bit string such as "0010"; length fixes the site count.
inline BitConfig config_from_string(const std::string& text) {
    const int n = static_cast<int>(text.size());
    if (n < kMinSites || n > kMaxSites)
        throw SizeError("bit string \"" + text + "\" has unsupported length " +
                        std::to_string(n));
    std::uint32_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw SpecError("bit string \"" + text + "\" contains character '" +
                            std::string(1, c) + "'; only 0 and 1 are allowed");
        bits = (bits << 1) | static_cast<std::uint32_t>(c == '1');
    }
    return BitConfig(n, bits);
}

}  // namespace tichain
