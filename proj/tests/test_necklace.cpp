#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "tichain/necklace.hpp"

using namespace tichain;

namespace {

std::set<std::string> member_strings(const CyclicOrbit& orbit) {
    std::set<std::string> out;
    for (const BitConfig& m : orbit.members) out.insert(to_string(m));
    return out;
}

}  // namespace

TEST_CASE("bit packing follows site-1-is-msb convention") {
    CHECK(config_from_string("100").bits() == 4);
    CHECK(config_from_string("001").bits() == 1);
    CHECK(config_from_string("0110").bits() == 6);
    CHECK(to_string(BitConfig(3, 4)) == "100");
    CHECK(BitConfig(3, 4).site(1));
    CHECK_FALSE(BitConfig(3, 4).site(3));
    CHECK(BitConfig(4, 6).weight() == 2);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(BitConfig(1, 0), SizeError);
    CHECK_THROWS_AS(BitConfig(25, 0), SizeError);
    CHECK_THROWS_AS(BitConfig(3, 8), SizeError);
    CHECK_THROWS_AS(config_from_string("01a"), SpecError);
    CHECK_THROWS_AS(config_from_string("0"), SizeError);
    CHECK_NOTHROW(BitConfig(24, (1u << 24) - 1));
}

TEST_CASE("translation moves site i to site i+1") {
    // "100" has the excitation on site 1; one step carries it to site 2.
    CHECK(to_string(translate(config_from_string("100"))) == "010");
    CHECK(to_string(translate(config_from_string("010"))) == "001");
    CHECK(to_string(translate(config_from_string("001"))) == "100");
    // Multi-step, negative and wrapping counts.
    BitConfig s = config_from_string("1000");
    CHECK(translate(s, 2) == config_from_string("0010"));
    CHECK(translate(s, -1) == config_from_string("0001"));
    CHECK(translate(s, 4) == s);
    CHECK(translate(s, 7) == translate(s, 3));
}

TEST_CASE("translation agrees with the string oracle everywhere") {
    for (int n = 2; n <= 10; ++n) {
        for (std::uint32_t v = 0; v < (1u << n); ++v) {
            BitConfig s(n, v);
            CHECK(to_string(translate(s)) == oracle::rotate_right(to_string(s)));
        }
    }
}

TEST_CASE("period and canonical rotation match the oracle") {
    for (int n = 2; n <= 10; ++n) {
        for (std::uint32_t v = 0; v < (1u << n); ++v) {
            BitConfig s(n, v);
            CHECK(period_of_string(s) == oracle::orbit_period(to_string(s)));
            CHECK(to_string(canonical_rotation(s)) ==
                  oracle::smallest_rotation(to_string(s)));
        }
    }
}

TEST_CASE("period divides the site count") {
    for (int n = 2; n <= 12; ++n)
        for (std::uint32_t v = 0; v < (1u << n); ++v)
            CHECK(n % period_of_string(BitConfig(n, v)) == 0);
}

TEST_CASE("orbit_of lists members in translation order from the representative") {
    CyclicOrbit orbit = orbit_of(config_from_string("0110"));
    CHECK(to_string(orbit.representative) == "0011");
    CHECK(orbit.period == 4);
    REQUIRE(orbit.members.size() == 4);
    for (int j = 0; j < orbit.period; ++j)
        CHECK(orbit.members[static_cast<std::size_t>(j)] ==
              translate(orbit.representative, j));
    CHECK(member_strings(orbit) ==
          std::set<std::string>{"0011", "1001", "1100", "0110"});
}

TEST_CASE("orbit members equal the oracle orbit for every input") {
    for (int n = 2; n <= 10; ++n) {
        for (std::uint32_t v = 0; v < (1u << n); ++v) {
            CyclicOrbit orbit = orbit_of(BitConfig(n, v));
            CHECK(member_strings(orbit) == oracle::orbit_strings(to_string(BitConfig(n, v))));
            CHECK(static_cast<int>(orbit.members.size()) == orbit.period);
        }
    }
}

TEST_CASE("enumerate_orbits covers the register exactly once") {
    for (int n : {2, 3, 4, 5, 6, 8, 10, 12}) {
        std::vector<CyclicOrbit> orbits = enumerate_orbits(n);
        std::set<std::uint32_t> seen;
        std::size_t total = 0;
        for (const CyclicOrbit& o : orbits) {
            CHECK(o.representative == canonical_rotation(o.representative));
            for (const BitConfig& m : o.members) seen.insert(m.bits());
            total += o.members.size();
        }
        CHECK(total == (1u << n));
        CHECK(seen.size() == (1u << n));
        // Ascending representative order.
        for (std::size_t i = 1; i < orbits.size(); ++i)
            CHECK(orbits[i - 1].representative < orbits[i].representative);
    }
}

TEST_CASE("orbit counts follow the necklace-counting values") {
    // Number of binary necklaces for N = 2..12.
    const std::map<int, std::size_t> expected = {
        {2, 3},  {3, 4},  {4, 6},   {5, 8},   {6, 14},  {7, 20},
        {8, 36}, {9, 60}, {10, 108}, {11, 188}, {12, 352}};
    for (const auto& [n, count] : expected)
        CHECK(enumerate_orbits(n).size() == count);
}

TEST_CASE("classes are closed under complement and cover all orbits") {
    for (int n = 2; n <= 10; ++n) {
        std::vector<SloccClass> classes = partition_classes(n);
        std::set<std::uint32_t> covered;
        int label = 1;
        for (const SloccClass& cls : classes) {
            CHECK(cls.label == label++);
            REQUIRE(!cls.orbit_reps.empty());
            CHECK(cls.orbit_reps.size() <= 2);
            std::set<std::uint32_t> reps;
            for (const BitConfig& r : cls.orbit_reps) {
                reps.insert(r.bits());
                covered.insert(r.bits());
            }
            // Complement of every member orbit stays inside the class.
            for (const BitConfig& r : cls.orbit_reps)
                CHECK(reps.count(canonical_rotation(complement_of(r)).bits()) == 1);
        }
        CHECK(covered.size() == enumerate_orbits(n).size());
    }
}

TEST_CASE("class lists for 3..6 sites match the reference grouping") {
    using Grouping = std::vector<std::vector<std::string>>;
    const std::map<int, Grouping> expected = {
        {3, {{"000", "111"}, {"001", "011"}}},
        {4, {{"0000", "1111"}, {"0001", "0111"}, {"0011"}, {"0101"}}},
        {5,
         {{"00000", "11111"},
          {"00001", "01111"},
          {"00011", "00111"},
          {"00101", "01011"}}},
        {6,
         {{"000000", "111111"},
          {"000001", "011111"},
          {"000011", "001111"},
          {"000101", "010111"},
          {"000111"},
          {"001001", "011011"},
          {"001011", "001101"},
          {"010101"}}},
    };
    for (const auto& [n, grouping] : expected) {
        std::vector<SloccClass> classes = partition_classes(n);
        // Compare as sets of unit lists: labelling order is by smallest
        // representative, which need not match the reference row order.
        std::set<std::vector<std::string>> got, want;
        for (const SloccClass& cls : classes) {
            std::vector<std::string> reps;
            for (const BitConfig& r : cls.orbit_reps) reps.push_back(to_string(r));
            got.insert(reps);
        }
        for (const auto& row : grouping) want.insert(row);
        CHECK(got == want);
        CHECK(classes.size() == grouping.size());
    }
}

TEST_CASE("class counts for 3..6 sites") {
    CHECK(partition_classes(3).size() == 2);
    CHECK(partition_classes(4).size() == 4);
    CHECK(partition_classes(5).size() == 4);
    CHECK(partition_classes(6).size() == 8);
}
