#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tichain/necklace.hpp"
#include "tichain/statevector.hpp"

namespace tichain {

// Decomposition coefficients with modulus below this are treated as zero.
inline constexpr double kCoeffCutoff = 1e-10;

// One member of the translation-eigenstate basis.  With anchor a and orbit
// period k the state is
//     (1/sqrt(k)) * sum_{j=0}^{k-1} e^{+i 2 pi m j / k} |T^j(a)>,
// an eigenstate of one translation step with eigenvalue e^{-i 2 pi m / k}.
// The anchor is the orbit member that carries the real positive amplitude;
// build_basis anchors at the canonical representative, state_from_unit at
// the configuration it was given.
struct TIBasisState {
    CyclicOrbit orbit;
    int phase_index = 0;  // m in [0, period)
    complex eigenvalue;   // e^{-i 2 pi m / period}
    BitConfig anchor;

    // Sparse amplitudes sorted by packed basis index; exactly `period` long.
    std::vector<std::pair<std::uint32_t, complex>> support;

    // Stable identifier "<representative bits>:<m>", e.g. "001:1".
    std::string id() const;

    StateVector dense() const;
};

// The translation eigenstate on the orbit of `unit`, anchored at `unit`
// itself.  phase_index must lie in [0, period).
TIBasisState state_from_unit(BitConfig unit, int phase_index);

// Complete orthonormal eigenbasis of the n_sites register: every orbit
// contributes period-many states, ordered by (representative, phase index)
// and anchored at the representative.  2^n_sites states in total.
std::vector<TIBasisState> build_basis(int n_sites);

// Sparse inner products; conjugation on the first argument.
complex inner(const TIBasisState& a, const TIBasisState& b);
complex inner(const TIBasisState& a, const StateVector& psi);

// Discrete labels attached to a basis state: the orbit period k, the phase
// index m, and the spin fraction 1/k the eigenvalue is quantized in.
struct TopologyLabel {
    int period = 0;
    int phase_index = 0;
    double fractional_spin = 0.0;  // 1 / period
};

TopologyLabel topology_label(const TIBasisState& state);

struct DecompositionEntry {
    std::string id;
    BitConfig unit;  // orbit representative
    int period = 0;
    int phase_index = 0;
    complex eigenvalue;
    complex coefficient;
};

// Coefficients of a dense state over the full eigenbasis, in basis order.
struct Decomposition {
    int n_sites = 0;
    std::vector<DecompositionEntry> entries;
    double residual_norm = 0.0;  // ||psi - sum c_i e_i||, zero up to rounding
};

Decomposition decompose(const StateVector& psi);

struct TiVerdict {
    bool is_ti = false;
    // The common translation eigenvalue, present only when is_ti.
    std::optional<complex> eigenvalue;
};

// True iff every coefficient above kCoeffCutoff sits in one eigenvalue
// sector, i.e. the state is translationally invariant up to a phase.
TiVerdict is_ti(const StateVector& psi);

}  // namespace tichain
