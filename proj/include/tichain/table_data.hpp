#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tichain {

// One row of the bundled reference energy table: the cyclic units grouped
// into the row (canonical representatives) and the values listed for the
// three ZZ couplings.  Cells the reference leaves blank are absent.
struct EnergyTableRow {
    std::vector<std::string> units;
    std::optional<double> h0;
    std::optional<double> h1;
    std::optional<double> h2;
};

bool has_reference_energy_table(int n_sites);

// Site counts the reference table covers, ascending: 3, 4, 5, 6.
const std::vector<int>& reference_energy_sizes();

// Rows for one site count, in the reference print order.
const std::vector<EnergyTableRow>& reference_energy_rows(int n_sites);

// The global-flip comparison table: the four states it distinguishes and
// their listed values.  The reference lists the magnitude N in its H0
// column; the computed expectation is -N for all four states (the operator
// convention carries a leading minus), so only |<H0>| is comparable.
struct FlipTableRow {
    std::string state_id;  // all0 | all1 | GHZ_1 | GHZ_2
    double h_nl = 0.0;
};

const std::vector<FlipTableRow>& reference_flip_rows();

}  // namespace tichain
