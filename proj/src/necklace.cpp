#include "tichain/necklace.hpp"

#include <algorithm>

namespace tichain {

CyclicOrbit orbit_of(BitConfig s) {
    CyclicOrbit orbit;
    orbit.n_sites = s.n_sites();
    orbit.representative = canonical_rotation(s);
    orbit.period = period_of_string(s);
    orbit.members.reserve(static_cast<std::size_t>(orbit.period));
    BitConfig cur = orbit.representative;
    for (int j = 0; j < orbit.period; ++j) {
        orbit.members.push_back(cur);
        cur = translate(cur, 1);
    }
    return orbit;
}

std::vector<CyclicOrbit> enumerate_orbits(int n_sites) {
    // Constructor of the probe configuration validates n_sites.
    BitConfig probe(n_sites, 0);
    const std::uint32_t count = 1u << n_sites;
    std::vector<bool> seen(count, false);
    std::vector<CyclicOrbit> orbits;
    // Ascending scan: the first unseen member of each orbit is automatically
    // the canonical (smallest) representative.
    for (std::uint32_t v = 0; v < count; ++v) {
        if (seen[v]) continue;
        CyclicOrbit orbit = orbit_of(BitConfig(n_sites, v));
        for (const BitConfig& m : orbit.members) seen[m.bits()] = true;
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<SloccClass> partition_classes(int n_sites) {
    std::vector<CyclicOrbit> orbits = enumerate_orbits(n_sites);
    std::vector<bool> grouped(orbits.size(), false);

    // Representatives are already ascending, so binary search locates the
    // orbit holding the complement of a representative.
    auto orbit_index_of = [&](BitConfig cfg) {
        BitConfig rep = canonical_rotation(cfg);
        auto it = std::lower_bound(orbits.begin(), orbits.end(), rep,
                                   [](const CyclicOrbit& o, const BitConfig& r) {
                                       return o.representative < r;
                                   });
        return static_cast<std::size_t>(it - orbits.begin());
    };

    std::vector<SloccClass> classes;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (grouped[i]) continue;
        SloccClass cls;
        cls.n_sites = n_sites;
        cls.label = static_cast<int>(classes.size()) + 1;
        cls.orbit_reps.push_back(orbits[i].representative);
        grouped[i] = true;
        const std::size_t j = orbit_index_of(complement_of(orbits[i].representative));
        if (!grouped[j]) {
            cls.orbit_reps.push_back(orbits[j].representative);
            grouped[j] = true;
        }
        std::sort(cls.orbit_reps.begin(), cls.orbit_reps.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace tichain
