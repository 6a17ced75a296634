#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tichain/hamiltonian.hpp"

namespace tichain {

// w_ent below -kWitnessTol flags entanglement; anything else is inconclusive.
inline constexpr double kWitnessTol = 1e-10;
// Step of the |z1| grid used to cross-check the separable baseline.
inline constexpr double kSepGridStep = 1e-3;
// Tolerance of the |z1| + |z0| = 1 moduli constraint.
inline constexpr double kModuliTol = 1e-12;

// Translationally invariant product state (sqrt(z1) |1> + sqrt(z0) |0>) on
// every site, parameterized by complex z1, z0 with |z1| + |z0| = 1 (a
// constraint on the moduli, which is what makes each site normalized).
struct SeparableTIState {
    int n_sites = 0;
    complex z1;
    complex z0;

    SeparableTIState(int n_sites, complex z1, complex z0);

    // Dense product state; principal branch of the square roots.  Only the
    // moduli |z1|, |z0| enter ZZ expectations, so the branch choice never
    // shows up in the witness numbers.
    StateVector realize() const;
};

// rho = p |psi><psi| + (1 - p) I / 2^N with a normalized pure part.
struct WernerState {
    int n_sites = 0;
    double p = 0.0;
    StateVector pure_part;

    WernerState(int n_sites, double p, StateVector pure_part);
};

enum class WitnessVerdict { FlagsEntangled, NoConclusion };

std::string to_string(WitnessVerdict verdict);

struct WitnessResult {
    double expectation_neg_h = 0.0;  // tr[rho (-H)]
    double e_sep = 0.0;              // separable floor of tr[rho (-H)]
    double w_ent = 0.0;              // expectation_neg_h - e_sep
    WitnessVerdict verdict = WitnessVerdict::NoConclusion;
};

// tr[rho_sep (-H)] in closed form for a single-ZZ Hamiltonian:
// N (|z1| - |z0|)^2.  Throws when the coupling range is a multiple of the
// ring size (the bond then degenerates to the identity and the closed form
// no longer applies).
double separable_expectation(const SeparableTIState& state,
                             const HamiltonianSpec& h);

struct ESepGrid {
    double value = 0.0;   // minimal tr[rho_sep (-H)] over the product family
    double argmin = 0.0;  // |z1| at the minimum
};

// Grid search of separable_expectation over |z1| in [0, 1] at kSepGridStep
// resolution; the minimum is 0 at |z1| = 1/2 for every valid ZZ coupling.
ESepGrid e_sep_grid(int n_sites, const HamiltonianSpec& h);

// The separable floor of tr[rho (-H)]: analytically 0 (the closed form is a
// square), confirmed against the grid search before returning.
double e_sep_baseline(int n_sites, const HamiltonianSpec& h);

// Witness value of a normalized pure state / a Werner state.  For Werner
// states the traceless ZZ coupling gives tr[rho (-H)] = p <psi|(-H)|psi>.
WitnessResult witness_value(const StateVector& psi, const HamiltonianSpec& h);
WitnessResult witness_value(const WernerState& rho, const HamiltonianSpec& h);

// Known separability threshold for two-qubit Werner states whose pure part
// is maximally entangled: the state is entangled exactly when p exceeds the
// returned value (1/3).  Empty for every other Werner family, where no such
// closed-form criterion is wired in.
std::optional<double> werner_threshold(const WernerState& rho);

struct CounterexampleEntry {
    std::string state_id;
    double w_ent = 0.0;
};

// Scans a family of entangled pure TI states (both GHZ combinations plus
// every eigenbasis state of period >= 2) and lists the ones the witness
// fails to flag.  A non-empty list shows the witness is one-sided: it never
// mislabels separable states, but it does miss entangled ones.
struct CounterexampleReport {
    int n_scanned = 0;
    std::vector<CounterexampleEntry> missed;
};

CounterexampleReport counterexample_report(int n_sites, const HamiltonianSpec& h);

}  // namespace tichain
