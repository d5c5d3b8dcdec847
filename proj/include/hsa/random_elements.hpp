#pragma once

#include <random>

#include "hsa/free_element.hpp"

namespace hsa {

struct RandomElementConfig {
    unsigned d = 2;
    unsigned max_len = 4;       // words up to this length
    unsigned terms = 4;         // term draws (collisions may merge)
    bool allow_empty_word = true;
    int coeff_bound = 3;        // coefficients uniform in ±{1..bound}
};

// seeded, reproducible sparse element generator used by the property suites
FreeElement random_element(std::mt19937_64& rng, const RandomElementConfig& cfg);

}  // namespace hsa
