#pragma once

#include <cstdint>
#include <optional>

#include "mlab/word.hpp"

namespace mlab {

struct WalkTrajectory {
    std::vector<long> lengths;  // reduced length after each step (size = steps)
    ReducedWord final_word;
};

// Simple random walk on F_k: multiply by a uniform letter among the 2k
// generators and inverses at each step (non-lazy; S disjoint from S⁻¹).
WalkTrajectory simple_random_walk(int k, long steps, uint64_t seed);

// Certified lower estimate of the spectral radius of the walk operator on
// F_k: sup over n ≤ n_max of p_{2n}(e)^{1/2n}, with the exact return
// probabilities computed through the birth-death chain on word lengths
// (up-probability (2k-1)/2k from any positive length). Converges to
// √(2k-1)/k from below as n_max grows (and to 1 for k = 1).
double estimate_spectral_radius(int k, int n_max);

// Smallest integer φ ≥ 1 with (2k·κ^φ)^r / (1-κ) ≤ ν^{-r} for every r ≥ 1;
// equivalently 2k·κ^φ·ν ≤ 1-κ. Verified internally by scanning r = 1..1000.
int compute_phi(int k, double kappa, double nu);

struct WalkParams {
    int k = 2;
    double kappa = 0.0;   // spectral radius upper bound, in (0,1)
    double nu = 2.0;      // decay base, > 1
    int phi = 0;          // from compute_phi
    int r = 1;            // ball radius >= 1
    long horizon = 0;     // max steps; must be >= phi*r
    long trials = 0;
    uint64_t seed = 0;
    bool random_start_direction = false;  // start word random instead of a₁^(1+φ)r
};

struct HittingReport {
    double empirical_freq = 0.0;
    double bound = 0.0;            // ν^{-r}
    double truncation_tail = 0.0;  // (2k)^r κ^{T+1} / (1-κ)
    double sigma = 0.0;            // binomial SE at p = min(bound+tail, 1)
    long hits = 0;
    long trials = 0;
    int start_distance = 0;        // (1+φ) r
};

// Monte Carlo frequency of the walk started at distance (1+φ)r hitting
// B_r(identity) within the horizon. The analytic truncation tail accounts
// for the cut-off of the infinite-horizon claim, so the checkable statement
// is freq ≤ ν^{-r} + tail + 3σ.
HittingReport hitting_experiment(const WalkParams& params);

}  // namespace mlab
