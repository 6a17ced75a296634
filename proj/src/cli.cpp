#include "tichain/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "tichain/hamiltonian.hpp"
#include "tichain/necklace.hpp"
#include "tichain/table_data.hpp"
#include "tichain/tibasis.hpp"
#include "tichain/witness.hpp"

namespace tichain::cli {

namespace {

constexpr double kTableTol = 1e-10;

const char* kFlipFootnote =
    "The reference lists the magnitude N in its H0 column; under the energy "
    "table's operator convention (H0 = -sum sz sz) all four states have "
    "<H0> = -N, so the magnitude is the comparable quantity.";

// ===== small parsing helpers ===============================================

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const std::string& tok : split(text, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw SpecError("cannot parse integer \"" + tok + "\" in list \"" +
                            text + "\"");
        }
    }
    return out;
}

complex parse_complex(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.empty() || parts.size() > 2)
        throw SpecError("complex values are written re[,im]; got \"" + text +
                        "\"");
    try {
        std::size_t used = 0;
        const double re = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        double im = 0.0;
        if (parts.size() == 2) {
            const double v = std::stod(parts[1], &used);
            if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
            im = v;
        }
        return {re, im};
    } catch (const std::exception&) {
        throw SpecError("complex values are written re[,im]; got \"" + text +
                        "\"");
    }
}

// "unit:m" -> basis state anchored at the unit as written.
TIBasisState parse_state_id(const std::string& text) {
    const std::size_t colon = text.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw SpecError("state ids are written <unit>:<m>, e.g. \"001:1\"; "
                        "got \"" + text + "\"");
    int m = 0;
    try {
        std::size_t used = 0;
        m = std::stoi(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw SpecError("phase index in \"" + text + "\" is not an integer");
    }
    return state_from_unit(config_from_string(text.substr(0, colon)), m);
}

// Named fixture states accepted by the witness verb.
StateVector parse_named_state(const std::string& name, int n_sites) {
    if (name == "all0") return basis_ket(BitConfig(n_sites, 0));
    if (name == "all1")
        return basis_ket(BitConfig(n_sites, BitConfig(n_sites, 0).mask()));
    if (name == "GHZ_1") return ghz_state(n_sites, +1);
    if (name == "GHZ_2") return ghz_state(n_sites, -1);
    return parse_state_id(name).dense();
}

// ===== text rendering ========================================================

struct TextTable {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v) { return Json(v).dump(); }

std::string fmt(complex z) {
    return "(" + fmt(z.real()) + ", " + fmt(z.imag()) + ")";
}

std::string fmt_cell(const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_table(const std::vector<TextTable>& tables, std::ostream& out) {
    bool first = true;
    for (const TextTable& t : tables) {
        if (!first) out << '\n';
        first = false;
        if (!t.title.empty()) out << t.title << '\n';
        std::vector<std::size_t> width(t.headers.size());
        for (std::size_t c = 0; c < t.headers.size(); ++c)
            width[c] = t.headers[c].size();
        for (const auto& row : t.rows)
            for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                out << cells[c];
                if (c + 1 < cells.size())
                    out << std::string(width[c] - cells[c].size() + 2, ' ');
            }
            out << '\n';
        };
        line(t.headers);
        for (const auto& row : t.rows) line(row);
    }
}

void render_csv(const std::vector<TextTable>& tables, std::ostream& out) {
    auto join = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size()) out << ',';
        }
        out << '\n';
    };
    bool first = true;
    for (const TextTable& t : tables) {
        if (!first) out << '\n';
        first = false;
        join(t.headers);
        for (const auto& row : t.rows) join(row);
    }
}

// ===== verb handlers =========================================================

struct Outcome {
    Json command;
    Json payload;
    std::vector<TextTable> tables;
    int exit_code = 0;
};

Outcome do_gen(int n, bool full) {
    Outcome result;
    result.command = {{"verb", "gen"}, {"n", n}, {"options", {{"full", full}}}};

    Json states = Json::array();
    TextTable table{"", {"unit", "m", "period", "eigenvalue"}, {}};
    for (const TIBasisState& state : build_basis(n)) {
        Json entry;
        entry["unit"] = to_string(state.orbit.representative);
        entry["m"] = state.phase_index;
        entry["eigenvalue"] = complex_to_json(state.eigenvalue);
        entry["period"] = state.orbit.period;
        if (full) {
            const StateVector dense = state.dense();
            Json amps = Json::array();
            for (const complex& a : dense.amplitudes())
                amps.push_back(complex_to_json(a));
            entry["amplitudes"] = std::move(amps);
        }
        table.rows.push_back({to_string(state.orbit.representative),
                              std::to_string(state.phase_index),
                              std::to_string(state.orbit.period),
                              fmt(state.eigenvalue)});
        states.push_back(std::move(entry));
    }
    result.payload = {{"n", n}, {"states", std::move(states)}};
    result.tables.push_back(std::move(table));
    return result;
}

Outcome do_classify(int n) {
    Outcome result;
    result.command = {{"verb", "classify"}, {"n", n}, {"options", Json::object()}};

    Json orbits = Json::array();
    TextTable orbit_table{"orbits", {"repr", "period", "members"}, {}};
    for (const CyclicOrbit& orbit : enumerate_orbits(n)) {
        Json members = Json::array();
        std::string joined;
        for (const BitConfig& m : orbit.members) {
            members.push_back(to_string(m));
            joined += (joined.empty() ? "" : "|") + to_string(m);
        }
        orbits.push_back({{"repr", to_string(orbit.representative)},
                          {"period", orbit.period},
                          {"members", std::move(members)}});
        orbit_table.rows.push_back({to_string(orbit.representative),
                                    std::to_string(orbit.period), joined});
    }

    Json classes = Json::array();
    TextTable class_table{"classes", {"label", "units"}, {}};
    for (const SloccClass& cls : partition_classes(n)) {
        Json units = Json::array();
        std::string joined;
        for (const BitConfig& r : cls.orbit_reps) {
            units.push_back(to_string(r));
            joined += (joined.empty() ? "" : "|") + to_string(r);
        }
        classes.push_back({{"label", cls.label}, {"units", std::move(units)}});
        class_table.rows.push_back({std::to_string(cls.label), joined});
    }

    result.payload = {{"n", n},
                      {"orbits", std::move(orbits)},
                      {"classes", std::move(classes)}};
    result.tables.push_back(std::move(orbit_table));
    result.tables.push_back(std::move(class_table));
    return result;
}

Outcome do_energies(const std::vector<int>& ns,
                    const std::vector<std::string>& hs, bool check, bool fill) {
    Outcome result;
    result.command = {{"verb", "energies"},
                      {"n", ns},
                      {"options",
                       {{"h", hs}, {"check", check}, {"fill", fill}}}};
    result.payload = emit_table1(ns, hs, check, fill);

    TextTable table{"", {"n", "units", "states"}, {}};
    for (const std::string& h : hs) table.headers.push_back(h);
    if (check) table.headers.push_back("check");
    for (const Json& block : result.payload["blocks"]) {
        for (const Json& row : block["rows"]) {
            std::vector<std::string> cells;
            cells.push_back(fmt_cell(block["n"]));
            std::string joined;
            for (const Json& u : row["units"])
                joined += (joined.empty() ? "" : "|") + u.get<std::string>();
            cells.push_back(joined);
            cells.push_back(fmt_cell(row["n_states"]));
            for (const std::string& h : hs)
                cells.push_back(fmt_cell(row["energies"][h]));
            if (check) {
                std::string verdict = "match";
                for (const auto& item : row["check"].items())
                    if (item.value().get<std::string>() != "match")
                        verdict = "MISMATCH";
                cells.push_back(verdict);
            }
            table.rows.push_back(std::move(cells));
        }
    }
    result.tables.push_back(std::move(table));
    if (check && result.payload["check"]["mismatches"].get<int>() > 0)
        result.exit_code = 1;
    return result;
}

Outcome do_table2(int n) {
    Outcome result;
    result.command = {{"verb", "energies"},
                      {"n", n},
                      {"options", {{"table2", true}}}};
    result.payload = emit_table2(n);

    TextTable table{"", {"state", "h_nl", "h_nl_reference", "h0", "abs_h0"}, {}};
    for (const Json& row : result.payload["rows"])
        table.rows.push_back({fmt_cell(row["state"]), fmt_cell(row["h_nl"]),
                              fmt_cell(row["h_nl_reference"]),
                              fmt_cell(row["h0"]), fmt_cell(row["abs_h0"])});
    result.tables.push_back(std::move(table));
    return result;
}

Outcome do_spectrum(int n, const std::string& h_text) {
    Outcome result;
    result.command = {{"verb", "spectrum"},
                      {"n", n},
                      {"options", {{"h", h_text}}}};
    const HamiltonianSpec h = parse_hamiltonian(h_text, n);
    const SpectrumReport report = diagonalize(h);

    Json eigenvalues = Json::array();
    for (double v : report.eigenvalues) eigenvalues.push_back(v);
    Json degeneracies = Json::array();
    TextTable table{"", {"value", "multiplicity"}, {}};
    for (const auto& [value, mult] : report.degeneracies) {
        degeneracies.push_back(Json::array({value, mult}));
        table.rows.push_back({fmt(value), std::to_string(mult)});
    }
    result.payload = {{"hamiltonian", h.name},
                      {"n", n},
                      {"eigenvalues", std::move(eigenvalues)},
                      {"degeneracies", std::move(degeneracies)}};
    if (conserves_weight(h)) {
        Json blocks = Json::object();
        for (const auto& [weight, values] : report.magnetization_blocks) {
            Json list = Json::array();
            for (double v : values) list.push_back(v);
            blocks[std::to_string(weight)] = std::move(list);
        }
        result.payload["magnetization_blocks"] = std::move(blocks);
    }
    result.tables.push_back(std::move(table));
    return result;
}

Outcome do_scan(int n, const std::string& states_text,
                const std::string& phi_text) {
    Outcome result;
    result.command = {{"verb", "scan"},
                      {"n", n},
                      {"options",
                       {{"states", states_text}, {"phi", phi_text}}}};

    std::vector<TIBasisState> states;
    if (states_text.empty()) {
        // Default: the single-excitation multiplet (all phase indices of the
        // weight-1 orbit), the set the chirality argument is about.
        for (int m = 0; m < n; ++m)
            states.push_back(state_from_unit(BitConfig(n, 1), m));
    } else {
        for (const std::string& id : split(states_text, ','))
            states.push_back(parse_state_id(id));
    }

    std::vector<double> phis;
    std::vector<std::string> literals;
    for (const std::string& tok : split(phi_text, ',')) {
        phis.push_back(parse_angle(tok));
        literals.push_back(tok);
    }

    const ChiralityScan scan = chirality_scan(n, states, phis);

    Json ids = Json::array();
    for (const std::string& id : scan.state_ids) ids.push_back(id);

    TextTable table{"", {"phi", "phi_value"}, {}};
    for (const std::string& id : scan.state_ids)
        table.headers.push_back("E[" + id + "]");
    table.headers.push_back("argmin");

    Json rows = Json::array();
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
        const ChiralityScan::Row& row = scan.rows[i];
        Json energies = Json::array();
        Json argmin = Json::array();
        std::vector<std::string> cells{literals[i], fmt(row.phi)};
        std::string winners;
        for (double e : row.energies) {
            energies.push_back(e);
            cells.push_back(fmt(e));
        }
        for (int idx : row.argmin) {
            argmin.push_back(scan.state_ids[static_cast<std::size_t>(idx)]);
            winners += (winners.empty() ? "" : "|") +
                       scan.state_ids[static_cast<std::size_t>(idx)];
        }
        cells.push_back(winners);
        rows.push_back({{"phi", row.phi},
                        {"phi_literal", literals[i]},
                        {"energies", std::move(energies)},
                        {"argmin", std::move(argmin)}});
        table.rows.push_back(std::move(cells));
    }
    result.payload = {{"hamiltonian", "hprime"},
                      {"n", n},
                      {"states", std::move(ids)},
                      {"rows", std::move(rows)}};
    result.tables.push_back(std::move(table));
    return result;
}

Outcome do_decompose(const std::string& ket_text, const std::string& file) {
    Outcome result;
    result.command = {{"verb", "decompose"},
                      {"options", {{"ket", ket_text}, {"file", file}}}};
    if (ket_text.empty() == file.empty())
        throw SpecError("decompose needs exactly one of --ket or --file");

    const StateVector psi = ket_text.empty()
                                ? read_state_file(file)
                                : basis_ket(config_from_string(ket_text));
    const Decomposition decomposition = decompose(psi);
    const TiVerdict verdict = is_ti(psi);

    Json coefficients = Json::array();
    TextTable table{"", {"state", "unit", "m", "eigenvalue", "coefficient"}, {}};
    for (const DecompositionEntry& entry : decomposition.entries) {
        if (std::abs(entry.coefficient) <= kCoeffCutoff) continue;
        coefficients.push_back({{"state", entry.id},
                                {"unit", to_string(entry.unit)},
                                {"m", entry.phase_index},
                                {"eigenvalue", complex_to_json(entry.eigenvalue)},
                                {"value", complex_to_json(entry.coefficient)}});
        table.rows.push_back({entry.id, to_string(entry.unit),
                              std::to_string(entry.phase_index),
                              fmt(entry.eigenvalue), fmt(entry.coefficient)});
    }
    result.payload = {{"n", psi.n_sites()},
                      {"residual_norm", decomposition.residual_norm},
                      {"ti",
                       {{"is_ti", verdict.is_ti},
                        {"eigenvalue", verdict.eigenvalue
                                           ? complex_to_json(*verdict.eigenvalue)
                                           : Json(nullptr)}}},
                      {"coefficients", std::move(coefficients)}};
    result.tables.push_back(std::move(table));
    return result;
}

Json witness_entry(const std::string& id, const WitnessResult& w) {
    return {{"state", id},
            {"w_ent", w.w_ent},
            {"verdict", to_string(w.verdict)}};
}

Outcome do_witness(int n, const std::string& h_text, const std::string& state,
                   double werner_p, bool has_werner_p,
                   const std::string& z1_text, const std::string& z0_text) {
    Outcome result;
    Json options = {{"h", h_text}};
    if (!state.empty()) options["state"] = state;
    if (has_werner_p) options["werner_p"] = werner_p;
    if (!z1_text.empty()) options["z1"] = z1_text;
    if (!z0_text.empty()) options["z0"] = z0_text;
    result.command = {{"verb", "witness"}, {"n", n}, {"options", options}};

    const HamiltonianSpec h = parse_hamiltonian(h_text, n);
    result.payload = {{"hamiltonian", h.name}, {"n", n}};
    TextTable table{"", {"state", "w_ent", "verdict"}, {}};

    if (!z1_text.empty() || !z0_text.empty()) {
        // Separable-family mode: closed form, explicit cross-check, grid floor.
        if (z1_text.empty() || z0_text.empty())
            throw SpecError("separable mode needs both --z1 and --z0");
        const SeparableTIState sep(n, parse_complex(z1_text),
                                   parse_complex(z0_text));
        const double closed = separable_expectation(sep, h);
        const double explicit_value = -expectation(h, sep.realize());
        const ESepGrid grid = e_sep_grid(n, h);
        result.payload["separable"] = {{"z1", complex_to_json(sep.z1)},
                                       {"z0", complex_to_json(sep.z0)},
                                       {"closed_form", closed},
                                       {"explicit", explicit_value}};
        result.payload["e_sep"] = e_sep_baseline(n, h);
        result.payload["e_sep_grid"] = {{"value", grid.value},
                                        {"argmin", grid.argmin}};
        result.tables.push_back(
            {"", {"quantity", "value"},
             {{"closed_form", fmt(closed)},
              {"explicit", fmt(explicit_value)},
              {"e_sep", fmt(0.0)},
              {"grid_argmin", fmt(grid.argmin)}}});
        return result;
    }

    result.payload["e_sep"] = e_sep_baseline(n, h);

    if (!state.empty()) {
        const StateVector psi = parse_named_state(state, n);
        Json entries = Json::array();
        if (has_werner_p) {
            const WernerState rho(n, werner_p, psi);
            const WitnessResult w = witness_value(rho, h);
            Json entry = witness_entry(state, w);
            entry["werner_p"] = werner_p;
            const std::optional<double> threshold = werner_threshold(rho);
            // Two independent facts, reported side by side: what the
            // indicator says, and what is actually known about the state.
            Json known = Json::object();
            if (threshold) {
                known["entangled_iff_p_above"] = *threshold;
                known["known_entangled"] = werner_p > *threshold;
            } else {
                known = nullptr;
            }
            entry["known_status"] = known;
            table.rows.push_back({state, fmt(w.w_ent), to_string(w.verdict)});
            entries.push_back(std::move(entry));
        } else {
            const WitnessResult w = witness_value(psi, h);
            table.rows.push_back({state, fmt(w.w_ent), to_string(w.verdict)});
            entries.push_back(witness_entry(state, w));
        }
        result.payload["entries"] = std::move(entries);
        result.tables.push_back(std::move(table));
        return result;
    }

    // Default mode: the counterexample scan over entangled pure TI states.
    const CounterexampleReport report = counterexample_report(n, h);
    Json entries = Json::array();
    for (const CounterexampleEntry& e : report.missed) {
        entries.push_back({{"state", e.state_id},
                           {"w_ent", e.w_ent},
                           {"verdict", "no-conclusion"}});
        table.rows.push_back({e.state_id, fmt(e.w_ent), "no-conclusion"});
    }
    result.payload["scanned"] = report.n_scanned;
    result.payload["entries"] = std::move(entries);
    result.tables.push_back(std::move(table));
    return result;
}

// ===== verify ================================================================

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

StateVector random_state(int n, std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    StateVector psi(n);
    for (std::uint32_t v = 0; v < psi.dim(); ++v)
        psi[v] = complex(gauss(rng), gauss(rng));
    psi.normalize();
    return psi;
}

std::vector<CheckResult> run_verify_checks(int n, unsigned seed) {
    std::vector<CheckResult> checks;
    auto add = [&](const std::string& name, bool pass,
                   const std::string& detail) {
        checks.push_back({name, pass, detail});
    };

    {  // Orbits partition the register and appear in canonical order.
        bool ok = true;
        std::string detail = "orbits cover all strings exactly once";
        std::size_t total = 0;
        BitConfig prev;
        bool have_prev = false;
        for (const CyclicOrbit& orbit : enumerate_orbits(n)) {
            total += orbit.members.size();
            if (orbit.period != period_of_string(orbit.representative) ||
                n % orbit.period != 0)
                ok = false;
            if (have_prev && !(prev < orbit.representative)) ok = false;
            prev = orbit.representative;
            have_prev = true;
        }
        if (total != (std::size_t{1} << n)) {
            ok = false;
            detail = "orbit sizes sum to " + std::to_string(total);
        }
        add("orbit-partition", ok, detail);
    }

    {  // Classes close under complement; counts match the reference lists.
        bool ok = true;
        std::string detail = "complement closure and reference counts";
        const std::map<int, std::size_t> expected = {{3, 2}, {4, 4}, {5, 4}, {6, 8}};
        for (int size = 3; size <= 6; ++size) {
            const auto classes = partition_classes(size);
            if (classes.size() != expected.at(size)) {
                ok = false;
                detail = std::to_string(size) + " sites gave " +
                         std::to_string(classes.size()) + " classes";
            }
            for (const SloccClass& cls : classes) {
                for (const BitConfig& rep : cls.orbit_reps) {
                    const BitConfig partner =
                        canonical_rotation(complement_of(rep));
                    if (std::find(cls.orbit_reps.begin(), cls.orbit_reps.end(),
                                  partner) == cls.orbit_reps.end())
                        ok = false;
                }
            }
        }
        add("class-closure", ok, detail);
    }

    {  // Basis completeness: Gram matrix equals identity.
        const auto basis = build_basis(n);
        double worst = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) {
                const complex g = inner(basis[i], basis[j]);
                worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
            }
        add("basis-orthonormal", worst <= 1e-12,
            "max Gram deviation " + fmt(worst));
    }

    {  // Stored eigenvalues match the applied translation and are N-th roots.
        bool ok = true;
        double worst = 0.0;
        for (const TIBasisState& state : build_basis(n)) {
            const SymmetryVerdict v = check_symmetry(state.dense(), 1);
            if (!v.is_eigenstate) ok = false;
            worst = std::max(worst, std::abs(v.eigenvalue - state.eigenvalue));
            if (std::abs(std::pow(state.eigenvalue, n) - 1.0) > 1e-9) ok = false;
        }
        add("basis-eigenvalue", ok && worst <= 1e-10,
            "max eigenvalue deviation " + fmt(worst));
    }

    {  // Energy table cells match the bundled reference.
        const Json doc = emit_table1(reference_energy_sizes(),
                                     {"h0", "h1", "h2"}, true, false);
        const int mismatches = doc["check"]["mismatches"].get<int>();
        add("energy-table", mismatches == 0,
            std::to_string(mismatches) + " mismatched cells");
    }

    {  // Global-flip table values.
        const Json doc = emit_table2(n);
        bool ok = true;
        for (const Json& row : doc["rows"]) {
            if (std::abs(row["h_nl"].get<double>() -
                         row["h_nl_reference"].get<double>()) > kTableTol)
                ok = false;
            if (std::abs(row["abs_h0"].get<double>() - n) > kTableTol) ok = false;
        }
        add("flip-table", ok, "H_nl values and |<H0>| = N");
    }

    {  // Decomposition round trip on random states.
        std::mt19937 rng(seed);
        bool ok = true;
        double worst = 0.0;
        const int trials = 20;
        const int size = std::min(n, 6);
        for (int t = 0; t < trials; ++t) {
            const StateVector psi = random_state(size, rng);
            const Decomposition d = decompose(psi);
            double coeff_sq = 0.0;
            for (const DecompositionEntry& e : d.entries)
                coeff_sq += std::norm(e.coefficient);
            worst = std::max(worst, std::abs(coeff_sq - 1.0));
            worst = std::max(worst, d.residual_norm);
        }
        ok = worst <= 1e-10;
        add("decompose-roundtrip", ok, "worst deviation " + fmt(worst));
    }

    {  // Witness closed form against explicit product-state expectation.
        std::mt19937 rng(seed + 1);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        bool ok = true;
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            const int size = 2 + static_cast<int>(unit(rng) * 4.99);
            int range = 1 + static_cast<int>(unit(rng) * 2.99);
            if (range % size == 0) range = 1;
            const double u = unit(rng);
            const complex z1 = std::polar(u, 2 * std::numbers::pi * unit(rng));
            const complex z0 =
                std::polar(1.0 - u, 2 * std::numbers::pi * unit(rng));
            const SeparableTIState sep(size, z1, z0);
            const HamiltonianSpec h = zz_hamiltonian(size, range);
            const double diff = std::abs(separable_expectation(sep, h) -
                                         (-expectation(h, sep.realize())));
            worst = std::max(worst, diff);
        }
        ok = worst <= 1e-10;
        add("witness-closed-form", ok, "worst |closed - explicit| " + fmt(worst));
    }

    {  // Counterexample scan: misses the GHZ pair, flags the W multiplet.
        const auto report = counterexample_report(3, zz_hamiltonian(3, 1));
        bool has_ghz = false;
        bool has_w = false;
        for (const CounterexampleEntry& e : report.missed) {
            if (e.state_id == "GHZ_1" && std::abs(e.w_ent - 3.0) <= kTableTol)
                has_ghz = true;
            if (e.state_id == "001:0") has_w = true;
        }
        add("witness-counterexample", has_ghz && !has_w,
            "GHZ_1 missed with w_ent 3, W multiplet flagged");
    }

    {  // Chirality argmins for the three-site single-excitation multiplet.
        std::vector<TIBasisState> trio;
        for (int m = 0; m < 3; ++m)
            trio.push_back(state_from_unit(BitConfig(3, 1), m));
        const double third = 2.0 * std::numbers::pi / 3.0;
        const ChiralityScan scan = chirality_scan(3, trio, {-third, 0.0, third});
        auto sole = [&](std::size_t row, int expect) {
            return scan.rows[row].argmin.size() == 1 &&
                   scan.rows[row].argmin[0] == expect;
        };
        add("chirality-argmin", sole(0, 1) && sole(1, 0) && sole(2, 2),
            "minima at m=1, m=0, m=2 for phi=-2pi/3, 0, +2pi/3");
    }

    {  // The hop coupling mixes the 4-site period-2 state into the rest of
       // its excitation-number sector.
        std::vector<TIBasisState> states;
        states.push_back(state_from_unit(config_from_string("0101"), 0));
        for (int m = 0; m < 4; ++m)
            states.push_back(state_from_unit(config_from_string("0011"), m));
        const Eigen::MatrixXcd mix =
            mixing_report(hop_hamiltonian(4, 0.0), states);
        double best = 0.0;
        for (Eigen::Index j = 1; j < mix.cols(); ++j)
            best = std::max(best, std::abs(mix(0, j)));
        add("hop-mixing", best > 0.1,
            "largest coupling out of the period-2 state " + fmt(best));
    }

    return checks;
}

Outcome do_verify(int n, unsigned seed) {
    Outcome result;
    result.command = {{"verb", "verify"},
                      {"n", n},
                      {"options", {{"seed", seed}}}};
    const std::vector<CheckResult> checks = run_verify_checks(n, seed);

    Json entries = Json::array();
    TextTable table{"", {"status", "check", "detail"}, {}};
    int passed = 0;
    for (const CheckResult& c : checks) {
        if (c.pass) ++passed;
        entries.push_back({{"name", c.name}, {"pass", c.pass},
                           {"detail", c.detail}});
        table.rows.push_back({c.pass ? "ok" : "FAIL", c.name, c.detail});
    }
    table.rows.push_back({"", "passed",
                          std::to_string(passed) + "/" +
                              std::to_string(checks.size())});
    result.payload = {{"checks", std::move(entries)},
                      {"passed", passed},
                      {"total", static_cast<int>(checks.size())}};
    result.tables.push_back(std::move(table));
    result.exit_code = (passed == static_cast<int>(checks.size())) ? 0 : 1;
    return result;
}

}  // namespace

// ===== table documents =======================================================

Json emit_table1(const std::vector<int>& n_range,
                 const std::vector<std::string>& hamiltonians, bool check,
                 bool fill) {
    if (n_range.empty()) throw SpecError("energy table needs site counts");
    std::vector<std::string> hs = hamiltonians;
    if (hs.empty()) hs = {"h0", "h1", "h2"};
    for (const std::string& h : hs)
        if (h != "h0" && h != "h1" && h != "h2")
            throw SpecError("energy table columns are h0, h1, h2; got \"" + h +
                            "\"");

    Json doc;
    doc["hamiltonians"] = hs;
    Json blocks = Json::array();
    int mismatches = 0;
    Json bad_cells = Json::array();

    for (int n : n_range) {
        if (!has_reference_energy_table(n))
            throw SizeError("no reference energy table for " +
                            std::to_string(n) + " sites; covered: 3..6");
        Json rows = Json::array();
        for (const EnergyTableRow& row : reference_energy_rows(n)) {
            // Live value from the m=0 basis state of the row's first unit;
            // every state grouped into the row shares it.
            const StateVector probe =
                state_from_unit(config_from_string(row.units.front()), 0)
                    .dense();
            Json units = Json::array();
            int n_states = 0;
            for (const std::string& u : row.units) {
                units.push_back(u);
                n_states += period_of_string(config_from_string(u));
            }

            Json energies = Json::object();
            Json check_cells = Json::object();
            Json filled = Json::array();
            for (const std::string& name : hs) {
                const std::optional<double>& printed =
                    name == "h0" ? row.h0 : (name == "h1" ? row.h1 : row.h2);
                const int range = name[1] - '0' + 1;
                const double live =
                    expectation(zz_hamiltonian(n, range), probe);
                if (printed) {
                    energies[name] = live;
                    if (check) {
                        const bool ok = std::abs(live - *printed) <= kTableTol;
                        check_cells[name] = ok ? "match" : "mismatch";
                        if (!ok) {
                            ++mismatches;
                            bad_cells.push_back({{"n", n},
                                                 {"units", units},
                                                 {"hamiltonian", name},
                                                 {"reference", *printed},
                                                 {"computed", live}});
                        }
                    }
                } else if (fill) {
                    energies[name] = live;
                    filled.push_back(name);
                } else {
                    energies[name] = nullptr;
                }
            }

            Json row_json = {{"units", std::move(units)},
                             {"n_states", n_states},
                             {"energies", std::move(energies)}};
            if (check) row_json["check"] = std::move(check_cells);
            if (fill && !filled.empty()) row_json["filled"] = std::move(filled);
            rows.push_back(std::move(row_json));
        }
        blocks.push_back({{"n", n}, {"rows", std::move(rows)}});
    }
    doc["blocks"] = std::move(blocks);
    if (check) {
        doc["check"] = {{"mismatches", mismatches}};
        if (mismatches > 0) doc["check"]["cells"] = std::move(bad_cells);
    }
    return doc;
}

Json emit_table2(int n_sites) {
    const HamiltonianSpec flip = flip_hamiltonian(n_sites);
    const HamiltonianSpec h0 = zz_hamiltonian(n_sites, 1);

    auto realize = [&](const std::string& id) {
        return parse_named_state(id, n_sites);
    };

    Json rows = Json::array();
    for (const FlipTableRow& row : reference_flip_rows()) {
        const StateVector psi = realize(row.state_id);
        const double h_nl = expectation(flip, psi);
        const double h0_value = expectation(h0, psi);
        rows.push_back({{"state", row.state_id},
                        {"h_nl", h_nl},
                        {"h_nl_reference", row.h_nl},
                        {"h0", h0_value},
                        {"abs_h0", std::abs(h0_value)},
                        {"h0_reference_magnitude", double(n_sites)}});
    }
    return {{"n", n_sites}, {"rows", std::move(rows)}, {"footnote", kFlipFootnote}};
}

// ===== entry point ===========================================================

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Translation-eigenstate toolkit for qubit rings"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table", "csv"}))
        ->capture_default_str();

    // Several verbs take a Hamiltonian through --h, so the short help flag
    // has to go; subcommands keep --help only.
    auto add_verb = [&](const std::string& name, const std::string& desc) {
        CLI::App* verb = app.add_subcommand(name, desc);
        verb->set_help_flag("--help", "Print this help message");
        verb->fallthrough();
        return verb;
    };

    int gen_n = 0;
    bool gen_full = false;
    auto* gen = add_verb("gen", "Emit the full translation eigenbasis");
    gen->add_option("--n", gen_n, "Number of sites")->required();
    gen->add_flag("--full", gen_full, "Include dense amplitudes per state");

    int classify_n = 0;
    auto* classify =
        add_verb("classify", "List cyclic orbits and unit classes");
    classify->add_option("--n", classify_n, "Number of sites")->required();

    std::string energies_n = "3,4,5,6";
    std::string energies_h = "h0,h1,h2";
    bool energies_check = false;
    bool energies_fill = false;
    bool energies_table2 = false;
    auto* energies = add_verb(
        "energies", "Render the reference energy tables from live values");
    energies->add_option("--n", energies_n, "Site counts (comma list)")
        ->capture_default_str();
    energies->add_option("--h", energies_h, "Hamiltonian columns (comma list)")
        ->capture_default_str();
    auto* check_flag = energies->add_flag("--check", energies_check,
                                          "Compare against reference values");
    auto* fill_flag = energies->add_flag("--fill", energies_fill,
                                         "Compute cells the reference leaves blank");
    energies
        ->add_flag("--table2", energies_table2,
                   "Render the global-flip table instead (single --n)")
        ->excludes(check_flag)
        ->excludes(fill_flag);

    int spectrum_n = 0;
    std::string spectrum_h;
    auto* spectrum =
        add_verb("spectrum", "Diagonalize a Hamiltonian spec");
    spectrum->add_option("--n", spectrum_n, "Number of sites")->required();
    spectrum->add_option("--h", spectrum_h, "Hamiltonian spec, e.g. h0+h1")
        ->required();

    int scan_n = 0;
    std::string scan_states;
    std::string scan_phi;
    auto* scan = add_verb(
        "scan", "Sweep the hop phase and report per-state energies");
    scan->add_option("--n", scan_n, "Number of sites")->required();
    scan->add_option("--states", scan_states,
                     "State ids (comma list; default: weight-1 multiplet)");
    scan->add_option("--phi", scan_phi, "Angles (comma list, e.g. -2pi/3,0)")
        ->required();

    std::string decompose_ket;
    std::string decompose_file;
    auto* decomp = add_verb(
        "decompose", "Expand a state over the translation eigenbasis");
    decomp->add_option("--ket", decompose_ket,
                       "Computational basis string, e.g. 100");
    decomp->add_option("--file", decompose_file, "State JSON file");

    int witness_n = 0;
    std::string witness_h = "h0";
    std::string witness_state;
    double witness_p = 0.0;
    std::string witness_z1;
    std::string witness_z0;
    auto* witness = add_verb(
        "witness", "Entanglement-indicator values and counterexample scan");
    witness->add_option("--n", witness_n, "Number of sites")->required();
    witness->add_option("--h", witness_h, "Single-ZZ Hamiltonian spec")
        ->capture_default_str();
    witness->add_option("--state", witness_state,
                        "State id, GHZ_1, GHZ_2, all0 or all1");
    auto* werner_opt = witness->add_option(
        "--werner-p", witness_p, "Werner mixing weight for --state");
    witness->add_option("--z1", witness_z1,
                        "Separable parameter z1 as re[,im]");
    witness->add_option("--z0", witness_z0,
                        "Separable parameter z0 as re[,im]");

    int verify_n = 6;
    unsigned verify_seed = 20260801;
    auto* verify = add_verb("verify", "Run the invariant suite");
    verify->add_option("--n", verify_n, "Number of sites")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "Random-check seed")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* target = &app;
        while (!target->get_subcommands().empty())
            target = target->get_subcommands().front();
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    if (gen->parsed()) {
        outcome = do_gen(gen_n, gen_full);
    } else if (classify->parsed()) {
        outcome = do_classify(classify_n);
    } else if (energies->parsed()) {
        if (energies_table2) {
            const std::vector<int> ns = parse_int_list(energies_n);
            if (ns.size() != 1)
                throw SpecError("--table2 takes a single --n value");
            outcome = do_table2(ns.front());
        } else {
            outcome = do_energies(parse_int_list(energies_n),
                                  split(energies_h, ','), energies_check,
                                  energies_fill);
        }
    } else if (spectrum->parsed()) {
        outcome = do_spectrum(spectrum_n, spectrum_h);
    } else if (scan->parsed()) {
        outcome = do_scan(scan_n, scan_states, scan_phi);
    } else if (decomp->parsed()) {
        outcome = do_decompose(decompose_ket, decompose_file);
    } else if (witness->parsed()) {
        outcome = do_witness(witness_n, witness_h, witness_state, witness_p,
                             werner_opt->count() > 0, witness_z1, witness_z0);
    } else {
        outcome = do_verify(verify_n, verify_seed);
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);

    if (format == "json") {
        Json envelope;
        envelope["schema_version"] = kSchemaVersion;
        envelope["command"] = outcome.command;
        envelope["payload"] = outcome.payload;
        envelope["elapsed_ms"] = elapsed.count();
        out << envelope.dump(2) << '\n';
    } else if (format == "table") {
        render_table(outcome.tables, out);
    } else {
        render_csv(outcome.tables, out);
    }
    return outcome.exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    try {
        if (const char* cap_text = std::getenv(kDenseCapEnv)) {
            try {
                std::size_t used = 0;
                const int cap = std::stoi(cap_text, &used);
                if (used != std::string(cap_text).size())
                    throw std::invalid_argument(cap_text);
                set_dense_site_cap(cap);
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                throw SpecError(std::string(kDenseCapEnv) +
                                " must be an integer, got \"" + cap_text +
                                "\"");
            }
        }
        return dispatch(args, out, err);
    } catch (const Error& e) {
        Json report = {{"error", e.name()}, {"message", e.what()}};
        err << report.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        Json report = {{"error", "internal"}, {"message", e.what()}};
        err << report.dump() << '\n';
        return 1;
    }
}

}  // namespace tichain::cli
