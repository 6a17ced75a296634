#pragma once

#include <vector>

#include "tichain/bitconfig.hpp"

namespace tichain {

// Orbit of one configuration under cyclic translation.  `members` lists the
// period distinct configurations in translation order starting from the
// canonical representative: members[j] = T^j(representative).
struct CyclicOrbit {
    int n_sites = 0;
    BitConfig representative;
    int period = 0;
    std::vector<BitConfig> members;
};

CyclicOrbit orbit_of(BitConfig s);

// All translation orbits of n_sites-bit configurations, ordered by ascending
// representative.  Orbit sizes sum to 2^n_sites.
std::vector<CyclicOrbit> enumerate_orbits(int n_sites);

// Orbits further grouped under global bit complement (local unitaries act
// site-by-site, so complement maps orbits to orbits).  `orbit_reps` holds the
// canonical representatives of the member orbits in ascending order; classes
// are labelled 1, 2, ... by their smallest representative.
struct SloccClass {
    int n_sites = 0;
    int label = 0;
    std::vector<BitConfig> orbit_reps;
};

std::vector<SloccClass> partition_classes(int n_sites);

}  // namespace tichain
