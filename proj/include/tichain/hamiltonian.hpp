#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "tichain/statevector.hpp"
#include "tichain/tibasis.hpp"

namespace tichain {

// Eigenvalues closer than this are merged into one degenerate level.
inline constexpr double kDegeneracyTol = 1e-8;
// diagonalize() ceiling: 12 sites = a 4096 x 4096 dense worst case.
inline constexpr int kDiagonalizeCap = 12;

// -sum_n sz_n sz_{n+range} (periodic), with sz |1> = +|1>, sz |0> = -|0>.
// range 1, 2, 3 correspond to the parse strings h0, h1, h2.
struct ZZTerm {
    int range = 1;
};

// -(1/2) sum_n (e^{i phi} s+_n s-_{n+1} + e^{-i phi} s-_n s+_{n+1}),
// periodic: hopping an excitation from site n+1 to site n picks up e^{i phi}.
struct HopTerm {
    double phi = 0.0;
    std::string phi_literal;  // the angle as written, e.g. "2pi/3"
};

// +sx_1 sx_2 ... sx_N, the global spin-flip coupling.
struct GlobalFlipTerm {};

using HamiltonianTerm = std::variant<ZZTerm, HopTerm, GlobalFlipTerm>;

struct HamiltonianSpec {
    int n_sites = 0;
    std::vector<HamiltonianTerm> terms;
    std::string name;  // canonical spec string, e.g. "h0+h1" or "hprime:2pi/3"
};

// Builders for the named couplings.
HamiltonianSpec zz_hamiltonian(int n_sites, int range);
HamiltonianSpec hop_hamiltonian(int n_sites, double phi,
                                const std::string& phi_literal = "");
HamiltonianSpec flip_hamiltonian(int n_sites);
HamiltonianSpec combine(const HamiltonianSpec& a, const HamiltonianSpec& b);

// Parses "h0", "h1", "h2", "hprime:<angle>", "hnl" and "+"-combinations,
// e.g. "h0+h1" or "h0+hprime:pi/2".
HamiltonianSpec parse_hamiltonian(const std::string& text, int n_sites);

// Parses an angle written as a decimal ("1.5708") or symbolically as
// [+|-][<num>]pi[/<den>], e.g. "pi", "-2pi/3", "0".
double parse_angle(const std::string& text);

// True when every term commutes with total sz, so the excitation number
// is conserved and the spectrum splits into magnetization blocks.
bool conserves_weight(const HamiltonianSpec& h);

StateVector apply(const HamiltonianSpec& h, const StateVector& psi);

// <psi|H|psi> / <psi|psi>; the imaginary part (zero up to rounding for the
// Hermitian terms above) is discarded.
double expectation(const HamiltonianSpec& h, const StateVector& psi);

// <bra|H|ket>; inputs are used as given (no normalization).
complex matrix_element(const HamiltonianSpec& h, const StateVector& bra,
                       const StateVector& ket);

Eigen::MatrixXcd dense_matrix(const HamiltonianSpec& h);

struct SpectrumReport {
    std::vector<double> eigenvalues;  // ascending, with multiplicity
    // (level value, multiplicity), merged at kDegeneracyTol.
    std::vector<std::pair<double, int>> degeneracies;
    // Per-excitation-number eigenvalues; filled only when the excitation
    // number is conserved.
    std::map<int, std::vector<double>> magnetization_blocks;
};

SpectrumReport diagonalize(const HamiltonianSpec& h);

// Energies of a fixed set of states as the hop phase is swept.
struct ChiralityScan {
    std::vector<std::string> state_ids;
    struct Row {
        double phi = 0.0;
        std::vector<double> energies;  // one per state, same order as ids
        // Indices of all states within kDegeneracyTol of the row minimum;
        // more than one entry means an explicit tie.
        std::vector<int> argmin;
    };
    std::vector<Row> rows;
};

ChiralityScan chirality_scan(int n_sites,
                             const std::vector<TIBasisState>& states,
                             const std::vector<double>& phis);

// Matrix of <e_i|H|e_j> over the given basis states; off-diagonal entries
// show which eigenstates the coupling mixes.
Eigen::MatrixXcd mixing_report(const HamiltonianSpec& h,
                               const std::vector<TIBasisState>& states);

}  // namespace tichain
