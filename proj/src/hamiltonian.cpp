#include "tichain/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <regex>

namespace tichain {

namespace {

std::string format_angle(double phi) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", phi);
    return buf;
}

void check_site_match(const HamiltonianSpec& h, int n_sites) {
    if (h.n_sites != n_sites)
        throw DimensionMismatch("Hamiltonian on " + std::to_string(h.n_sites) +
                                " sites applied to a " + std::to_string(n_sites) +
                                "-site state");
}

// H|s> as a sparse list of (configuration, amplitude) contributions.
std::vector<std::pair<std::uint32_t, complex>> apply_to_config(
    const HamiltonianSpec& h, BitConfig s) {
    const int n = s.n_sites();
    const std::uint32_t mask = s.mask();
    std::vector<std::pair<std::uint32_t, complex>> out;

    for (const HamiltonianTerm& term : h.terms) {
        if (std::holds_alternative<ZZTerm>(term)) {
            const int range = std::get<ZZTerm>(term).range;
            // Each bond contributes +1 when the two sites disagree and -1
            // when they agree, so the diagonal value is 2 * (#disagreements) - N.
            const int disagree =
                std::popcount(s.bits() ^ translate(s, range).bits());
            out.emplace_back(s.bits(), static_cast<double>(2 * disagree - n));
        } else if (std::holds_alternative<HopTerm>(term)) {
            const complex fwd = std::polar(0.5, std::get<HopTerm>(term).phi);
            for (int site = 1; site <= n; ++site) {
                const int next = (site % n) + 1;
                const std::uint32_t here = 1u << (n - site);
                const std::uint32_t ahead = 1u << (n - next);
                const bool occ_here = s.bits() & here;
                const bool occ_ahead = s.bits() & ahead;
                if (!occ_here && occ_ahead) {
                    // s+_site s-_next moves the excitation one step left.
                    out.emplace_back((s.bits() | here) & ~ahead, -fwd);
                } else if (occ_here && !occ_ahead) {
                    out.emplace_back((s.bits() & ~here) | ahead, -std::conj(fwd));
                }
            }
        } else {
            out.emplace_back(~s.bits() & mask, 1.0);
        }
    }
    return out;
}

}  // namespace

HamiltonianSpec zz_hamiltonian(int n_sites, int range) {
    if (range < 1 || range > 3)
        throw SpecError("ZZ coupling range must be 1, 2 or 3, got " +
                        std::to_string(range));
    BitConfig(n_sites, 0);  // validates the site count
    return {n_sites, {ZZTerm{range}}, "h" + std::to_string(range - 1)};
}

HamiltonianSpec hop_hamiltonian(int n_sites, double phi,
                                const std::string& phi_literal) {
    BitConfig(n_sites, 0);  // validates the site count
    const std::string literal = phi_literal.empty() ? format_angle(phi) : phi_literal;
    return {n_sites, {HopTerm{phi, literal}}, "hprime:" + literal};
}

HamiltonianSpec flip_hamiltonian(int n_sites) {
    BitConfig(n_sites, 0);  // validates the site count
    return {n_sites, {GlobalFlipTerm{}}, "hnl"};
}

HamiltonianSpec combine(const HamiltonianSpec& a, const HamiltonianSpec& b) {
    if (a.n_sites != b.n_sites)
        throw DimensionMismatch("cannot combine Hamiltonians on " +
                                std::to_string(a.n_sites) + " and " +
                                std::to_string(b.n_sites) + " sites");
    HamiltonianSpec out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    out.name = a.name + "+" + b.name;
    return out;
}

double parse_angle(const std::string& text) {
    static const std::regex pi_form(
        R"(^\s*([+-]?)(\d+(?:\.\d*)?)?pi(?:/(\d+(?:\.\d*)?))?\s*$)");
    static const std::regex number_form(R"(^\s*[+-]?\d+(?:\.\d*)?\s*$)");

    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        double value = std::numbers::pi;
        if (m[2].matched) value *= std::stod(m[2].str());
        if (m[3].matched) value /= std::stod(m[3].str());
        return m[1].str() == "-" ? -value : value;
    }
    if (std::regex_match(text, number_form)) return std::stod(text);
    throw SpecError("cannot parse angle \"" + text +
                    "\"; expected a number or [+|-][k]pi[/d]");
}

HamiltonianSpec parse_hamiltonian(const std::string& text, int n_sites) {
    HamiltonianSpec result;
    bool first = true;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t split = text.find('+', pos);
        if (split == std::string::npos) split = text.size();
        std::string token = text.substr(pos, split - pos);
        pos = split + 1;

        // Trim surrounding whitespace.
        const auto a = token.find_first_not_of(" \t");
        const auto b = token.find_last_not_of(" \t");
        token = (a == std::string::npos) ? "" : token.substr(a, b - a + 1);
        if (token.empty())
            throw SpecError("empty term in Hamiltonian spec \"" + text + "\"");

        HamiltonianSpec part;
        if (token == "h0" || token == "h1" || token == "h2") {
            part = zz_hamiltonian(n_sites, token[1] - '0' + 1);
        } else if (token == "hnl") {
            part = flip_hamiltonian(n_sites);
        } else if (token == "hprime") {
            part = hop_hamiltonian(n_sites, 0.0, "0");
        } else if (token.rfind("hprime:", 0) == 0) {
            const std::string literal = token.substr(7);
            part = hop_hamiltonian(n_sites, parse_angle(literal), literal);
        } else {
            throw SpecError("unknown Hamiltonian term \"" + token +
                            "\"; expected h0, h1, h2, hprime[:<angle>] or hnl");
        }
        result = first ? part : combine(result, part);
        first = false;
    }
    if (first) throw SpecError("empty Hamiltonian spec");
    return result;
}

bool conserves_weight(const HamiltonianSpec& h) {
    for (const HamiltonianTerm& term : h.terms)
        if (std::holds_alternative<GlobalFlipTerm>(term)) return false;
    return true;
}

StateVector apply(const HamiltonianSpec& h, const StateVector& psi) {
    check_site_match(h, psi.n_sites());
    StateVector out(psi.n_sites());
    for (std::uint32_t v = 0; v < psi.dim(); ++v) {
        const complex a = psi[v];
        if (a == complex{}) continue;
        for (const auto& [target, weight] :
             apply_to_config(h, BitConfig(psi.n_sites(), v)))
            out[target] += weight * a;
    }
    return out;
}

double expectation(const HamiltonianSpec& h, const StateVector& psi) {
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > kNormTol)
        throw NotNormalized("expectation value needs a normalized state; "
                            "norm is " + std::to_string(norm));
    return inner(psi, apply(h, psi)).real() / (norm * norm);
}

complex matrix_element(const HamiltonianSpec& h, const StateVector& bra,
                       const StateVector& ket) {
    return inner(bra, apply(h, ket));
}

Eigen::MatrixXcd dense_matrix(const HamiltonianSpec& h) {
    if (h.n_sites > kDiagonalizeCap)
        throw SizeError("dense matrix requested for " +
                        std::to_string(h.n_sites) + " sites; cap is " +
                        std::to_string(kDiagonalizeCap));
    const std::int64_t dim = std::int64_t{1} << h.n_sites;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col)
        for (const auto& [row, weight] : apply_to_config(
                 h, BitConfig(h.n_sites, static_cast<std::uint32_t>(col))))
            m(row, col) += weight;
    return m;
}

SpectrumReport diagonalize(const HamiltonianSpec& h) {
    if (h.n_sites > kDiagonalizeCap)
        throw SizeError("diagonalize called for " + std::to_string(h.n_sites) +
                        " sites; cap is " + std::to_string(kDiagonalizeCap));

    SpectrumReport report;

    if (conserves_weight(h)) {
        // The excitation number is conserved: diagonalize each magnetization
        // block separately instead of the full 2^N matrix.
        const int n = h.n_sites;
        std::vector<std::vector<std::uint32_t>> blocks(n + 1);
        for (std::uint32_t v = 0; v < (1u << n); ++v)
            blocks[std::popcount(v)].push_back(v);

        for (int w = 0; w <= n; ++w) {
            const auto& configs = blocks[w];
            const std::int64_t dim = static_cast<std::int64_t>(configs.size());
            std::map<std::uint32_t, std::int64_t> index_of;
            for (std::int64_t i = 0; i < dim; ++i) index_of[configs[i]] = i;

            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
            for (std::int64_t col = 0; col < dim; ++col)
                for (const auto& [row, weight] :
                     apply_to_config(h, BitConfig(n, configs[col])))
                    m(index_of.at(row), col) += weight;

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
                m, Eigen::EigenvaluesOnly);
            std::vector<double>& levels = report.magnetization_blocks[w];
            for (std::int64_t i = 0; i < dim; ++i)
                levels.push_back(solver.eigenvalues()(i));
            report.eigenvalues.insert(report.eigenvalues.end(), levels.begin(),
                                      levels.end());
        }
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            dense_matrix(h), Eigen::EigenvaluesOnly);
        for (std::int64_t i = 0; i < solver.eigenvalues().size(); ++i)
            report.eigenvalues.push_back(solver.eigenvalues()(i));
    }

    std::sort(report.eigenvalues.begin(), report.eigenvalues.end());

    // Merge near-coincident eigenvalues into degenerate levels.
    std::size_t level_start = 0;
    for (std::size_t i = 1; i <= report.eigenvalues.size(); ++i) {
        if (i < report.eigenvalues.size() &&
            report.eigenvalues[i] - report.eigenvalues[level_start] <= kDegeneracyTol)
            continue;
        double sum = 0.0;
        for (std::size_t j = level_start; j < i; ++j) sum += report.eigenvalues[j];
        report.degeneracies.emplace_back(sum / (i - level_start),
                                         static_cast<int>(i - level_start));
        level_start = i;
    }
    return report;
}

ChiralityScan chirality_scan(int n_sites,
                             const std::vector<TIBasisState>& states,
                             const std::vector<double>& phis) {
    if (states.empty())
        throw EmptyInput("chirality scan needs at least one state");
    if (phis.empty())
        throw EmptyInput("chirality scan needs at least one phase value");
    for (const TIBasisState& s : states)
        if (s.orbit.n_sites != n_sites)
            throw DimensionMismatch("chirality scan state " + s.id() +
                                    " lives on " +
                                    std::to_string(s.orbit.n_sites) +
                                    " sites, expected " +
                                    std::to_string(n_sites));

    ChiralityScan scan;
    std::vector<StateVector> dense;
    for (const TIBasisState& s : states) {
        scan.state_ids.push_back(s.id());
        dense.push_back(s.dense());
    }

    for (double phi : phis) {
        const HamiltonianSpec h = hop_hamiltonian(n_sites, phi);
        ChiralityScan::Row row;
        row.phi = phi;
        for (const StateVector& psi : dense)
            row.energies.push_back(expectation(h, psi));
        const double best = *std::min_element(row.energies.begin(),
                                              row.energies.end());
        for (std::size_t i = 0; i < row.energies.size(); ++i)
            if (row.energies[i] <= best + kDegeneracyTol)
                row.argmin.push_back(static_cast<int>(i));
        scan.rows.push_back(std::move(row));
    }
    return scan;
}

Eigen::MatrixXcd mixing_report(const HamiltonianSpec& h,
                               const std::vector<TIBasisState>& states) {
    const std::int64_t k = static_cast<std::int64_t>(states.size());
    Eigen::MatrixXcd m(k, k);
    for (std::int64_t j = 0; j < k; ++j) {
        const StateVector column = apply(h, states[j].dense());
        for (std::int64_t i = 0; i < k; ++i)
            m(i, j) = inner(states[i], column);
    }
    return m;
}

}  // namespace tichain
