#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tichain/tibasis.hpp"
#include "tichain/witness.hpp"

using namespace tichain;

namespace {

oracle::Vector to_eigen(const StateVector& psi) {
    oracle::Vector v(static_cast<Eigen::Index>(psi.dim()));
    for (std::uint32_t i = 0; i < psi.dim(); ++i) v[i] = psi[i];
    return v;
}

StateVector singlet() {
    StateVector psi(2);
    psi[1] = 1.0 / std::numbers::sqrt2;
    psi[2] = -1.0 / std::numbers::sqrt2;
    return psi;
}

StateVector sym_bell() { return state_from_unit(config_from_string("01"), 0).dense(); }

}  // namespace

TEST_CASE("separable parameters must have moduli summing to one") {
    CHECK_NOTHROW(SeparableTIState(3, 1.0, 0.0));
    CHECK_NOTHROW(SeparableTIState(3, complex(0.0, 0.5), complex(-0.5, 0.0)));
    CHECK_THROWS_AS(SeparableTIState(3, 0.5, 0.6), NotNormalized);
    CHECK_THROWS_AS(SeparableTIState(3, complex(0.5, 0.5), 0.5), NotNormalized);

    // The realized product state is normalized and translation invariant.
    const SeparableTIState sep(4, std::polar(0.6, 1.1), std::polar(0.4, -0.7));
    const StateVector psi = sep.realize();
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
    const SymmetryVerdict verdict = check_symmetry(psi);
    CHECK(verdict.is_eigenstate);
    CHECK(std::abs(verdict.eigenvalue - 1.0) < 1e-12);
}

TEST_CASE("closed form equals the explicit product-state expectation") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(unit(rng) * 4.99);
        int range = 1 + static_cast<int>(unit(rng) * 2.99);
        if (range % n == 0) range = 1;
        const double u = unit(rng);
        const SeparableTIState sep(
            n, std::polar(u, 2.0 * std::numbers::pi * unit(rng)),
            std::polar(1.0 - u, 2.0 * std::numbers::pi * unit(rng)));
        const HamiltonianSpec h = zz_hamiltonian(n, range);
        const double closed = separable_expectation(sep, h);
        const double explicit_value = -expectation(h, sep.realize());
        CHECK(std::abs(closed - explicit_value) < 1e-10);
    }
}

TEST_CASE("separable expectation fixtures") {
    CHECK(separable_expectation(SeparableTIState(3, 1.0, 0.0),
                                zz_hamiltonian(3, 1)) == doctest::Approx(3.0));
    CHECK(separable_expectation(SeparableTIState(3, 0.5, 0.5),
                                zz_hamiltonian(3, 1)) == doctest::Approx(0.0));
    CHECK(separable_expectation(SeparableTIState(4, 0.75, 0.25),
                                zz_hamiltonian(4, 2)) == doctest::Approx(1.0));
}

TEST_CASE("grid search floor is zero at balanced moduli") {
    for (int n : {2, 3, 4, 5}) {
        const ESepGrid grid = e_sep_grid(n, zz_hamiltonian(n, 1));
        CHECK(grid.value <= 1e-12);
        CHECK(grid.value >= 0.0);
        CHECK(std::abs(grid.argmin - 0.5) <= 1e-12);
        CHECK(e_sep_baseline(n, zz_hamiltonian(n, 1)) == 0.0);
    }
}

TEST_CASE("witness values of pure fixtures") {
    const HamiltonianSpec h0 = zz_hamiltonian(3, 1);

    // The symmetric single-excitation state is flagged.
    const WitnessResult w =
        witness_value(state_from_unit(config_from_string("001"), 0).dense(), h0);
    CHECK(w.expectation_neg_h == doctest::Approx(-1.0));
    CHECK(w.e_sep == 0.0);
    CHECK(w.w_ent == doctest::Approx(-1.0));
    CHECK(w.verdict == WitnessVerdict::FlagsEntangled);
    CHECK(to_string(w.verdict) == "flags-entangled");

    // Product and GHZ states land at +3: inconclusive.
    const WitnessResult ones =
        witness_value(basis_ket(config_from_string("111")), h0);
    CHECK(ones.w_ent == doctest::Approx(3.0));
    CHECK(ones.verdict == WitnessVerdict::NoConclusion);

    const WitnessResult ghz = witness_value(ghz_state(3, +1), h0);
    CHECK(ghz.w_ent == doctest::Approx(3.0));
    CHECK(ghz.verdict == WitnessVerdict::NoConclusion);
    CHECK(to_string(ghz.verdict) == "no-conclusion");
}

TEST_CASE("witness rejects anything but a single, non-degenerate ZZ coupling") {
    const StateVector psi = basis_ket(config_from_string("11"));
    CHECK_THROWS_AS(witness_value(psi, zz_hamiltonian(2, 2)), SpecError);
    CHECK_THROWS_AS(witness_value(psi, hop_hamiltonian(2, 0.0)), SpecError);
    CHECK_THROWS_AS(
        witness_value(psi, combine(zz_hamiltonian(2, 1), zz_hamiltonian(2, 3))),
        SpecError);
    CHECK_THROWS_AS(separable_expectation(SeparableTIState(2, 1.0, 0.0),
                                          zz_hamiltonian(2, 2)),
                    SpecError);
    CHECK_THROWS_AS(e_sep_grid(3, zz_hamiltonian(3, 3)), SpecError);

    StateVector skewed = basis_ket(config_from_string("11"));
    skewed[0] = 0.3;
    CHECK_THROWS_AS(witness_value(skewed, zz_hamiltonian(2, 1)), NotNormalized);
}

TEST_CASE("Werner construction guards") {
    CHECK_THROWS_AS(WernerState(2, 1.2, sym_bell()), SpecError);
    CHECK_THROWS_AS(WernerState(2, -0.1, sym_bell()), SpecError);
    CHECK_THROWS_AS(WernerState(3, 0.5, sym_bell()), DimensionMismatch);
    StateVector skewed = sym_bell();
    skewed[0] = 0.4;
    CHECK_THROWS_AS(WernerState(2, 0.5, skewed), NotNormalized);
}

TEST_CASE("Werner shortcut equals the explicit density-matrix trace") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss;
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            StateVector psi(n);
            for (std::uint32_t v = 0; v < psi.dim(); ++v)
                psi[v] = complex(gauss(rng), gauss(rng));
            psi.normalize();
            const double p = unit(rng);
            int range = 1 + static_cast<int>(unit(rng) * 2.99);
            if (range % n == 0) range = 1;

            const WitnessResult fast =
                witness_value(WernerState(n, p, psi), zz_hamiltonian(n, range));

            const oracle::Vector v = to_eigen(psi);
            const Eigen::Index dim = v.size();
            const oracle::Matrix rho =
                p * (v * v.adjoint()) +
                ((1.0 - p) / static_cast<double>(dim)) *
                    oracle::Matrix::Identity(dim, dim);
            const double slow =
                -(rho * oracle::zz_chain(n, range)).trace().real();
            CHECK(std::abs(fast.expectation_neg_h - slow) < 1e-10);
        }
    }
}

TEST_CASE("Werner witness is linear in the mixing weight") {
    const HamiltonianSpec h = zz_hamiltonian(2, 1);
    const double pure = witness_value(singlet(), h).w_ent;
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0})
        CHECK(witness_value(WernerState(2, p, singlet()), h).w_ent ==
              doctest::Approx(p * pure));
}

TEST_CASE("two-qubit Werner: indicator verdict vs known separability") {
    const HamiltonianSpec h = zz_hamiltonian(2, 1);

    const WernerState mid(2, 0.5, sym_bell());
    const WitnessResult w_mid = witness_value(mid, h);
    CHECK(w_mid.w_ent == doctest::Approx(-1.0));
    CHECK(w_mid.verdict == WitnessVerdict::FlagsEntangled);

    // p = 0.4 > 1/3: flagged, and genuinely entangled.
    const WernerState above(2, 0.4, singlet());
    const WitnessResult w_above = witness_value(above, h);
    CHECK(w_above.w_ent == doctest::Approx(-0.8));
    CHECK(w_above.verdict == WitnessVerdict::FlagsEntangled);
    REQUIRE(werner_threshold(above).has_value());
    CHECK(*werner_threshold(above) == doctest::Approx(1.0 / 3.0));
    CHECK(above.p > *werner_threshold(above));

    // p = 0.2 < 1/3: the indicator still fires, but the state is known to be
    // separable -- the pure-state baseline does not bound mixed states.
    // Both facts are asserted separately.
    const WernerState below(2, 0.2, singlet());
    const WitnessResult w_below = witness_value(below, h);
    CHECK(w_below.w_ent == doctest::Approx(-0.4));
    CHECK(w_below.verdict == WitnessVerdict::FlagsEntangled);
    CHECK(below.p < *werner_threshold(below));
}

TEST_CASE("the known threshold is only wired in for maximal two-qubit pairs") {
    CHECK(werner_threshold(WernerState(2, 0.5, sym_bell())).has_value());
    CHECK(werner_threshold(WernerState(2, 0.5, singlet())).has_value());
    CHECK(werner_threshold(WernerState(2, 0.5, ghz_state(2, +1))).has_value());
    CHECK_FALSE(
        werner_threshold(WernerState(2, 0.5, basis_ket(config_from_string("01"))))
            .has_value());
    CHECK_FALSE(werner_threshold(WernerState(3, 0.5, ghz_state(3, +1))).has_value());
}

TEST_CASE("counterexample scan: one-sided witness misses the GHZ pair") {
    const CounterexampleReport report =
        counterexample_report(3, zz_hamiltonian(3, 1));
    CHECK(report.n_scanned == 8);  // 2 GHZ combinations + 6 entangled eigenstates
    REQUIRE(report.missed.size() == 2);
    CHECK(report.missed[0].state_id == "GHZ_1");
    CHECK(report.missed[0].w_ent == doctest::Approx(3.0));
    CHECK(report.missed[1].state_id == "GHZ_2");
    CHECK(report.missed[1].w_ent == doctest::Approx(3.0));
}

TEST_CASE("counterexample scan at four sites") {
    const CounterexampleReport report =
        counterexample_report(4, zz_hamiltonian(4, 1));
    CHECK(report.n_scanned == 16);

    bool missed_w = false;
    bool missed_period2 = false;
    for (const CounterexampleEntry& e : report.missed) {
        if (e.state_id == "0001:0") missed_w = true;
        if (e.state_id == "0101:0" || e.state_id == "0101:1")
            missed_period2 = true;
    }
    CHECK(missed_w);           // <H0> = 0 on the weight-1 multiplet
    CHECK_FALSE(missed_period2);  // <H0> = +4 there, firmly flagged
}
