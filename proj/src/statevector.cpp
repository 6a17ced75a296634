#include "tichain/statevector.hpp"

#include <cmath>
#include <numbers>

namespace tichain {

namespace {

int g_dense_cap = kDefaultDenseCap;

void check_dense_size(int n_sites) {
    if (n_sites < kMinSites)
        throw SizeError("site count " + std::to_string(n_sites) +
                        " below minimum " + std::to_string(kMinSites));
    if (n_sites > dense_site_cap())
        throw SizeError("site count " + std::to_string(n_sites) +
                        " exceeds the dense-vector cap of " +
                        std::to_string(dense_site_cap()) + " sites");
}

}  // namespace

int dense_site_cap() { return g_dense_cap; }

void set_dense_site_cap(int cap) {
    if (cap < kMinSites || cap > kHardDenseCap)
        throw SizeError("dense-vector cap " + std::to_string(cap) +
                        " outside [" + std::to_string(kMinSites) + ", " +
                        std::to_string(kHardDenseCap) + "]");
    g_dense_cap = cap;
}

StateVector::StateVector(int n_sites) : n_sites_(n_sites) {
    check_dense_size(n_sites);
    amplitudes_.assign(std::size_t{1} << n_sites, complex{});
}

StateVector::StateVector(int n_sites, std::vector<complex> amplitudes)
    : n_sites_(n_sites), amplitudes_(std::move(amplitudes)) {
    check_dense_size(n_sites);
    if (amplitudes_.size() != (std::size_t{1} << n_sites))
        throw DimensionMismatch("amplitude list has length " +
                                std::to_string(amplitudes_.size()) + "; a " +
                                std::to_string(n_sites) +
                                "-site register needs " +
                                std::to_string(std::size_t{1} << n_sites));
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const complex& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

void StateVector::normalize() {
    const double n = norm();
    if (n < kZeroTol)
        throw DegenerateInput("cannot normalize a numerically zero vector");
    for (complex& a : amplitudes_) a /= n;
}

StateVector basis_ket(BitConfig s) {
    StateVector psi(s.n_sites());
    psi.at(s) = 1.0;
    return psi;
}

StateVector product_state(int n_sites, complex amp1, complex amp0) {
    StateVector psi(n_sites);
    for (std::uint32_t v = 0; v < psi.dim(); ++v) {
        const int w = std::popcount(v);
        psi[v] = std::pow(amp1, w) * std::pow(amp0, n_sites - w);
    }
    return psi;
}

StateVector ghz_state(int n_sites, int sign) {
    if (sign != 1 && sign != -1)
        throw SpecError("GHZ sign must be +1 or -1, got " + std::to_string(sign));
    StateVector psi(n_sites);
    const double r = 1.0 / std::numbers::sqrt2;
    psi[0] = r;
    psi[psi.dim() - 1] = sign * r;
    return psi;
}

StateVector apply_translation(const StateVector& psi, int steps) {
    StateVector out(psi.n_sites());
    for (std::uint32_t v = 0; v < psi.dim(); ++v)
        out.at(translate(BitConfig(psi.n_sites(), v), steps)) = psi[v];
    return out;
}

StateVector global_flip(const StateVector& psi) {
    StateVector out(psi.n_sites());
    const std::uint32_t mask = static_cast<std::uint32_t>(psi.dim() - 1);
    for (std::uint32_t v = 0; v < psi.dim(); ++v) out[~v & mask] = psi[v];
    return out;
}

complex inner(const StateVector& a, const StateVector& b) {
    if (a.n_sites() != b.n_sites())
        throw DimensionMismatch("inner product between a " +
                                std::to_string(a.n_sites()) + "-site and a " +
                                std::to_string(b.n_sites()) + "-site state");
    complex sum{};
    for (std::uint32_t v = 0; v < a.dim(); ++v) sum += std::conj(a[v]) * b[v];
    return sum;
}

SymmetryVerdict check_symmetry(const StateVector& psi, int steps) {
    const double norm = psi.norm();
    if (norm < kZeroTol)
        throw DegenerateInput("symmetry check on a numerically zero vector");

    const StateVector shifted = apply_translation(psi, steps);
    SymmetryVerdict verdict;
    verdict.eigenvalue = inner(psi, shifted) / (norm * norm);

    double dev = 0.0;
    for (std::uint32_t v = 0; v < psi.dim(); ++v)
        dev += std::norm(shifted[v] - verdict.eigenvalue * psi[v]);
    verdict.residual = std::sqrt(dev) / norm;
    verdict.is_eigenstate = verdict.residual <= kEigenTol;
    return verdict;
}

}  // namespace tichain
