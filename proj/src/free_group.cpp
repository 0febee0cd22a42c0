#include "mlab/free_group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mlab/rng.hpp"

namespace mlab {

namespace {

int uniform_letter(Rng& rng, int k) {
    int idx = static_cast<int>(rng.below(static_cast<uint64_t>(2 * k)));
    return idx < k ? idx + 1 : -(idx - k + 1);
}

}  // namespace

WalkTrajectory simple_random_walk(int k, long steps, uint64_t seed) {
    if (k < 1) throw std::invalid_argument("walk needs k >= 1");
    if (steps < 0) throw std::invalid_argument("walk needs steps >= 0");
    Rng rng = derive_rng(seed, seed_tag::walk);
    WalkTrajectory t;
    t.lengths.reserve(steps);
    Word w;
    for (long s = 0; s < steps; ++s) {
        int letter = uniform_letter(rng, k);
        if (!w.empty() && w.back() == -letter)
            w.pop_back();
        else
            w.push_back(letter);
        t.lengths.push_back(static_cast<long>(w.size()));
    }
    t.final_word = ReducedWord{std::move(w)};
    return t;
}

double estimate_spectral_radius(int k, int n_max) {
    if (k < 1) throw std::invalid_argument("estimate_spectral_radius needs k >= 1");
    if (n_max < 2 || n_max % 2 != 0)
        throw std::invalid_argument("estimate_spectral_radius needs even n_max >= 2");
    const double up = static_cast<double>(2 * k - 1) / (2 * k);
    const double down = 1.0 / (2 * k);
    std::vector<double> p(n_max + 2, 0.0), q(n_max + 2, 0.0);
    p[0] = 1.0;
    double best = 0.0;
    for (int t = 1; t <= n_max; ++t) {
        std::fill(q.begin(), q.end(), 0.0);
        q[1] += p[0];
        for (int m = 1; m <= std::min(t, n_max); ++m) {
            if (p[m] == 0.0) continue;
            if (m + 1 <= n_max + 1) q[m + 1] += p[m] * up;
            q[m - 1] += p[m] * down;
        }
        std::swap(p, q);
        if (t % 2 == 0 && p[0] > 0.0)
            best = std::max(best, std::pow(p[0], 1.0 / static_cast<double>(t)));
    }
    return best;
}

int compute_phi(int k, double kappa, double nu) {
    if (k < 1) throw std::invalid_argument("compute_phi needs k >= 1");
    if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("compute_phi needs kappa in (0,1)");
    if (!(nu > 1.0)) throw std::invalid_argument("compute_phi needs nu > 1");
    // 2k κ^φ ν ≤ 1-κ, solved in log space and nudged to the minimal integer.
    const double target = std::log1p(-kappa) - std::log(2.0 * k) - std::log(nu);
    int phi = std::max(1, static_cast<int>(std::ceil(target / std::log(kappa))));
    while (phi > 1 && (phi - 1) * std::log(kappa) <= target) --phi;
    while (phi * std::log(kappa) > target) ++phi;

    // Minimality certificate over r = 1..1000: φ satisfies the defining
    // inequality everywhere, φ-1 fails somewhere.
    auto holds = [&](int f, int r) {
        double lhs = r * (std::log(2.0 * k) + f * std::log(kappa) + std::log(nu));
        return lhs <= std::log1p(-kappa);
    };
    for (int r = 1; r <= 1000; ++r)
        if (!holds(phi, r)) throw std::logic_error("compute_phi: certificate failed");
    return phi;
}

HittingReport hitting_experiment(const WalkParams& params) {
    if (params.k < 1) throw std::invalid_argument("hitting_experiment needs k >= 1");
    if (!(params.kappa > 0.0 && params.kappa < 1.0))
        throw std::invalid_argument("hitting_experiment needs kappa in (0,1)");
    if (!(params.nu > 1.0)) throw std::invalid_argument("hitting_experiment needs nu > 1");
    if (params.r < 1) throw std::invalid_argument("hitting_experiment needs r >= 1");
    if (params.phi < 1) throw std::invalid_argument("hitting_experiment needs phi >= 1");
    if (params.trials < 1) throw std::invalid_argument("hitting_experiment needs trials >= 1");
    if (params.horizon < static_cast<long>(params.phi) * params.r)
        throw std::invalid_argument("hitting_experiment needs horizon >= phi*r");

    const int start_len = (1 + params.phi) * params.r;
    long hits = 0;
    for (long trial = 0; trial < params.trials; ++trial) {
        Rng rng = derive_rng(params.seed, seed_tag::walk, static_cast<uint64_t>(trial));
        Word w;
        w.reserve(start_len + 64);
        if (params.random_start_direction) {
            // random reduced word of length exactly (1+φ)r
            while (static_cast<int>(w.size()) < start_len) {
                int letter = uniform_letter(rng, params.k);
                if (!w.empty() && w.back() == -letter) continue;
                w.push_back(letter);
            }
        } else {
            w.assign(start_len, 1);
        }
        for (long s = 0; s < params.horizon; ++s) {
            int letter = uniform_letter(rng, params.k);
            if (!w.empty() && w.back() == -letter)
                w.pop_back();
            else
                w.push_back(letter);
            if (static_cast<int>(w.size()) <= params.r) {
                ++hits;
                break;
            }
        }
    }

    HittingReport report;
    report.hits = hits;
    report.trials = params.trials;
    report.start_distance = start_len;
    report.empirical_freq = static_cast<double>(hits) / static_cast<double>(params.trials);
    report.bound = std::pow(params.nu, -static_cast<double>(params.r));
    // #B ≤ (2k)^r elements, each visited after step T with probability ≤ κ^n
    report.truncation_tail =
        std::exp(params.r * std::log(2.0 * params.k) +
                 (params.horizon + 1) * std::log(params.kappa) - std::log1p(-params.kappa));
    double p0 = std::min(report.bound + report.truncation_tail, 1.0);
    report.sigma = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(params.trials));
    return report;
}

}  // namespace mlab
