#include "tichain/table_data.hpp"

#include "tichain/errors.hpp"

namespace tichain {

namespace {

const std::optional<double> blank = std::nullopt;

const std::vector<EnergyTableRow> kRows3 = {
    {{"000", "111"}, -3.0, blank, blank},
    {{"001", "011"}, 1.0, blank, blank},
};

const std::vector<EnergyTableRow> kRows4 = {
    {{"0000", "1111"}, -4.0, blank, blank},
    {{"0001", "0111"}, 0.0, 0.0, blank},
    {{"0011"}, 0.0, 4.0, blank},
    {{"0101"}, 4.0, blank, blank},
};

const std::vector<EnergyTableRow> kRows5 = {
    {{"00000", "11111"}, -5.0, blank, blank},
    {{"00001", "01111"}, -1.0, -1.0, blank},
    {{"00011", "00111"}, -1.0, 3.0, blank},
    {{"00101", "01011"}, 3.0, -1.0, blank},
};

const std::vector<EnergyTableRow> kRows6 = {
    {{"000000", "111111"}, -6.0, blank, blank},
    {{"001001", "011011"}, 2.0, 2.0, -6.0},
    {{"000001", "011111"}, -2.0, -2.0, -2.0},
    {{"000011", "001111"}, -2.0, 2.0, 2.0},
    {{"000101", "010111"}, 2.0, -2.0, 2.0},
    {{"000111"}, -2.0, 2.0, 6.0},
    {{"001011", "001101"}, 2.0, 2.0, -2.0},
    {{"010101"}, 6.0, blank, blank},
};

const std::vector<int> kSizes = {3, 4, 5, 6};

const std::vector<FlipTableRow> kFlipRows = {
    {"all0", 0.0},
    {"all1", 0.0},
    {"GHZ_1", 1.0},
    {"GHZ_2", -1.0},
};

}  // namespace

bool has_reference_energy_table(int n_sites) {
    return n_sites >= 3 && n_sites <= 6;
}

const std::vector<int>& reference_energy_sizes() { return kSizes; }

const std::vector<EnergyTableRow>& reference_energy_rows(int n_sites) {
    switch (n_sites) {
        case 3: return kRows3;
        case 4: return kRows4;
        case 5: return kRows5;
        case 6: return kRows6;
        default:
            throw SizeError("no reference energy table for " +
                            std::to_string(n_sites) + " sites; covered: 3..6");
    }
}

const std::vector<FlipTableRow>& reference_flip_rows() { return kFlipRows; }

}  // namespace tichain
