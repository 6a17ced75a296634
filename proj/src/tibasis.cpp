#include "tichain/tibasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace tichain {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

TIBasisState make_state(BitConfig anchor, int phase_index) {
    TIBasisState state;
    state.orbit = orbit_of(anchor);
    const int k = state.orbit.period;
    if (phase_index < 0 || phase_index >= k)
        throw PhaseIndexError("phase index " + std::to_string(phase_index) +
                              " outside [0, " + std::to_string(k) +
                              ") for unit " + to_string(anchor));
    state.phase_index = phase_index;
    // The quarter-turn multiples are exact; everything else comes from polar.
    if (phase_index == 0)
        state.eigenvalue = {1.0, 0.0};
    else if (2 * phase_index == k)
        state.eigenvalue = {-1.0, 0.0};
    else if (4 * phase_index == k)
        state.eigenvalue = {0.0, -1.0};
    else if (4 * phase_index == 3 * k)
        state.eigenvalue = {0.0, 1.0};
    else
        state.eigenvalue = std::polar(1.0, -kTwoPi * phase_index / k);
    state.anchor = anchor;

    const double r = 1.0 / std::sqrt(static_cast<double>(k));
    state.support.reserve(static_cast<std::size_t>(k));
    BitConfig cur = anchor;
    for (int j = 0; j < k; ++j) {
        state.support.emplace_back(cur.bits(),
                                   std::polar(r, kTwoPi * phase_index * j / k));
        cur = translate(cur, 1);
    }
    std::sort(state.support.begin(), state.support.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return state;
}

// Reduced fraction m/k identifying an eigenvalue e^{-i 2 pi m / k} exactly;
// distinct (m, k) pairs with equal reduction share the eigenvalue.
std::pair<int, int> eigenvalue_key(int phase_index, int period) {
    const int g = std::gcd(phase_index, period);  // gcd(0, k) == k
    return {phase_index / g, period / g};
}

}  // namespace

std::string TIBasisState::id() const {
    return to_string(orbit.representative) + ":" + std::to_string(phase_index);
}

StateVector TIBasisState::dense() const {
    StateVector psi(orbit.n_sites);
    for (const auto& [index, amp] : support) psi[index] = amp;
    return psi;
}

TIBasisState state_from_unit(BitConfig unit, int phase_index) {
    return make_state(unit, phase_index);
}

std::vector<TIBasisState> build_basis(int n_sites) {
    if (n_sites > dense_site_cap())
        throw SizeError("basis construction for " + std::to_string(n_sites) +
                        " sites exceeds the cap of " +
                        std::to_string(dense_site_cap()));
    std::vector<TIBasisState> basis;
    basis.reserve(std::size_t{1} << n_sites);
    for (const CyclicOrbit& orbit : enumerate_orbits(n_sites))
        for (int m = 0; m < orbit.period; ++m)
            basis.push_back(make_state(orbit.representative, m));
    return basis;
}

complex inner(const TIBasisState& a, const TIBasisState& b) {
    if (a.orbit.n_sites != b.orbit.n_sites)
        throw DimensionMismatch("inner product between basis states on " +
                                std::to_string(a.orbit.n_sites) + " and " +
                                std::to_string(b.orbit.n_sites) + " sites");
    complex sum{};
    auto i = a.support.begin();
    auto j = b.support.begin();
    while (i != a.support.end() && j != b.support.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            sum += std::conj(i->second) * j->second;
            ++i;
            ++j;
        }
    }
    return sum;
}

complex inner(const TIBasisState& a, const StateVector& psi) {
    if (a.orbit.n_sites != psi.n_sites())
        throw DimensionMismatch("inner product between a basis state on " +
                                std::to_string(a.orbit.n_sites) +
                                " sites and a state on " +
                                std::to_string(psi.n_sites()));
    complex sum{};
    for (const auto& [index, amp] : a.support)
        sum += std::conj(amp) * psi[index];
    return sum;
}

TopologyLabel topology_label(const TIBasisState& state) {
    TopologyLabel label;
    label.period = state.orbit.period;
    label.phase_index = state.phase_index;
    label.fractional_spin = 1.0 / state.orbit.period;
    return label;
}

Decomposition decompose(const StateVector& psi) {
    Decomposition result;
    result.n_sites = psi.n_sites();

    StateVector reconstruction(psi.n_sites());
    for (const TIBasisState& state : build_basis(psi.n_sites())) {
        DecompositionEntry entry;
        entry.id = state.id();
        entry.unit = state.orbit.representative;
        entry.period = state.orbit.period;
        entry.phase_index = state.phase_index;
        entry.eigenvalue = state.eigenvalue;
        entry.coefficient = inner(state, psi);
        for (const auto& [index, amp] : state.support)
            reconstruction[index] += entry.coefficient * amp;
        result.entries.push_back(std::move(entry));
    }

    double dev = 0.0;
    for (std::uint32_t v = 0; v < psi.dim(); ++v)
        dev += std::norm(psi[v] - reconstruction[v]);
    result.residual_norm = std::sqrt(dev);
    return result;
}

TiVerdict is_ti(const StateVector& psi) {
    if (psi.norm() < kZeroTol)
        throw DegenerateInput("symmetry classification of a numerically zero "
                              "vector");
    const Decomposition decomposition = decompose(psi);
    TiVerdict verdict;
    std::optional<std::pair<int, int>> sector;
    for (const DecompositionEntry& entry : decomposition.entries) {
        if (std::abs(entry.coefficient) <= kCoeffCutoff) continue;
        const auto key = eigenvalue_key(entry.phase_index, entry.period);
        if (!sector) {
            sector = key;
            verdict.eigenvalue = entry.eigenvalue;
        } else if (*sector != key) {
            return {false, std::nullopt};
        }
    }
    verdict.is_ti = sector.has_value();
    if (!verdict.is_ti) verdict.eigenvalue.reset();
    return verdict;
}

}  // namespace tichain
