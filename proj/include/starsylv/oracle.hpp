#pragma once

#include <cstdint>

#include "starsylv/model.hpp"

namespace starsylv {

// Exhaustive search over every X in GF(p)^{n x m}. Independent of the
// vectorized solver and the extraction machinery by construction: it only
// evaluates residuals.
struct BruteForceVerdict {
    bool consistent;
    mpz_class solutions;
};

// Requires a GF(p) system and p^(n*m) <= cap.
BruteForceVerdict brute_force_consistency(const StarSylvesterSystem& sys, std::uint64_t cap = 6561);

// One sampled GF(2) instance of the char-2 probe. a_holds: a solution exists
// (brute force over X). b_holds: some invertible S satisfies the congruence
// for every equation (exhaustive over GL_{m+n}(GF(2))). Both searches are
// exhaustive, so each verdict is a certificate. The probe asserts nothing
// about whether the two conditions stay equivalent in characteristic 2; it
// only reports data.
struct ProbeInstance {
    std::string system_text;  // serialized .ssys, for dumping anomalies
    std::size_t m, n, ell;
    bool a_holds;
    bool b_holds;
};

struct ProbeReport {
    std::vector<ProbeInstance> instances;
    std::size_t count_a_without_b = 0;  // would contradict the division-free direction
    std::size_t count_b_without_a = 0;  // congruence without a solution
};

// probe_enabled is the explicit char-2 gate; without it the probe refuses to
// run. max_total_dim caps m+n (default 3: at most 168 invertible candidates);
// values above 4 are rejected as too large to enumerate.
ProbeReport probe_char2(std::size_t max_total_dim, std::uint64_t seed, std::size_t sample_count,
                        bool probe_enabled);

}  // namespace starsylv
