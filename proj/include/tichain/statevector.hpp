#pragma once

#include <complex>
#include <vector>

#include "tichain/bitconfig.hpp"

namespace tichain {

using complex = std::complex<double>;

// Tolerance for inputs that are required to be unit vectors.
inline constexpr double kNormTol = 1e-9;
// Residual threshold below which a state counts as a translation eigenstate.
inline constexpr double kEigenTol = 1e-9;
// Norms below this are treated as the zero vector.
inline constexpr double kZeroTol = 1e-12;

// Dense 2^N-amplitude vectors are capped to keep memory bounded.  The cap
// defaults to 16 sites and can be raised at runtime (CLI: TICHAIN_DENSE_CAP)
// up to a hard ceiling of 22, i.e. 64 MiB per vector.
inline constexpr int kDefaultDenseCap = 16;
inline constexpr int kHardDenseCap = 22;

int dense_site_cap();
void set_dense_site_cap(int cap);

// Dense state of an n_sites-qubit register.  Amplitude i belongs to the
// computational basis configuration whose packed value is i (site 1 = MSB).
class StateVector {
public:
    StateVector() = default;

    // Zero vector of the full register.
    explicit StateVector(int n_sites);

    StateVector(int n_sites, std::vector<complex> amplitudes);

    int n_sites() const noexcept { return n_sites_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }

    complex& operator[](std::uint32_t index) { return amplitudes_[index]; }
    const complex& operator[](std::uint32_t index) const { return amplitudes_[index]; }

    complex& at(BitConfig s) { return amplitudes_[s.bits()]; }
    const complex& at(BitConfig s) const { return amplitudes_[s.bits()]; }

    const std::vector<complex>& amplitudes() const noexcept { return amplitudes_; }

    double norm() const;

    // Scales to unit norm; throws DegenerateInput on a numerically zero vector.
    void normalize();

private:
    int n_sites_ = 0;
    std::vector<complex> amplitudes_;
};

StateVector basis_ket(BitConfig s);

// (amp1 |1> + amp0 |0>) on every site, i.e. a translationally invariant
// product state.  Amplitudes need not be normalized.
StateVector product_state(int n_sites, complex amp1, complex amp0);

// (|0...0> + sign |1...1>) / sqrt(2); sign must be +1 or -1.
StateVector ghz_state(int n_sites, int sign);

// T^steps acting on the register: T |s> = |translate(s)>.
StateVector apply_translation(const StateVector& psi, int steps = 1);

// sx on every site: |s> -> |complement(s)>.
StateVector global_flip(const StateVector& psi);

// <a|b> with the conjugate on the first argument.
complex inner(const StateVector& a, const StateVector& b);

struct SymmetryVerdict {
    bool is_eigenstate = false;
    complex eigenvalue;  // best-fit c; meaningful only when is_eigenstate
    double residual = 0.0;  // ||T psi - c psi|| / ||psi||
};

// Tests whether psi is an eigenstate of translation by `steps`.  The
// candidate eigenvalue is the projection <psi|T psi> / <psi|psi>.
SymmetryVerdict check_symmetry(const StateVector& psi, int steps = 1);

}  // namespace tichain
