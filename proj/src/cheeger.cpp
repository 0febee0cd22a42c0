#include "mlab/cheeger.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlab/rng.hpp"

namespace mlab {

Ratio cheeger_exact(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("cheeger_exact needs at least 2 vertices");
    if (n > cap)
        throw std::invalid_argument(
            "cheeger_exact refused: |V| = " + std::to_string(n) + " exceeds cap " +
            std::to_string(cap) + "; use cheeger_lower_bound for large graphs");
    if (n > 62) throw std::invalid_argument("cheeger_exact subset mask overflow");

    // Neighbour bitmasks; loops do not put a vertex in its own boundary.
    std::vector<uint64_t> nbr(n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        if (u == v) continue;
        nbr[u] |= uint64_t(1) << v;
        nbr[v] |= uint64_t(1) << u;
    }

    const uint64_t full = (n == 64) ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    Ratio best{0, 1};
    bool have = false;
    for (uint64_t a = 1; a < full; ++a) {
        uint64_t reach = 0;
        for (uint64_t s = a; s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            reach |= nbr[v];
        }
        long boundary = std::popcount(reach & ~a);
        long side = std::min(std::popcount(a), std::popcount(full & ~a));
        if (!have || boundary * best.den < best.num * side) {
            best = Ratio{boundary, side};
            have = true;
            if (boundary == 0) break;  // disconnected: h = 0
        }
    }
    return best;
}

double adjacency_lambda2(const Graph& g, double tol) {
    const int n = g.vertex_count();
    auto deg = g.regularity();
    if (!deg) throw std::invalid_argument("spectral bound requires a regular graph");
    if (!g.is_simple()) throw std::invalid_argument("spectral bound requires a simple graph");
    if (!is_connected(g)) throw std::invalid_argument("spectral bound requires a connected graph");
    if (n < 2) throw std::invalid_argument("lambda2 undefined for |V| < 2");
    const double d = static_cast<double>(*deg);

    // Power iteration on B = A + dI restricted to 1⊥. B is PSD there, so the
    // dominant eigenvalue of the restriction is d + λ₂.
    std::vector<double> x(n), y(n);
    Rng rng(0x5eed0fbeefULL);
    for (int i = 0; i < n; ++i) x[i] = rng.unit() - 0.5;

    auto project_and_normalize = [&](std::vector<double>& v) {
        double mean = 0;
        for (double t : v) mean += t;
        mean /= n;
        double norm = 0;
        for (double& t : v) {
            t -= mean;
            norm += t * t;
        }
        norm = std::sqrt(norm);
        if (norm > 0)
            for (double& t : v) t /= norm;
        return norm;
    };
    project_and_normalize(x);

    double prev = -1.0;
    const long max_iter = 200000;
    for (long it = 0; it < max_iter; ++it) {
        for (int i = 0; i < n; ++i) y[i] = d * x[i];
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge_endpoints(e);
            y[u] += x[v];
            y[v] += x[u];
        }
        double norm = project_and_normalize(y);
        if (norm <= 1e-300) return -d;  // B annihilates 1⊥ (e.g. K₂)
        std::swap(x, y);
        if (prev >= 0 && std::abs(norm - prev) <= tol * norm) return norm - d;
        prev = norm;
    }
    return prev - d;
}

double cheeger_spectral_bound(const Graph& g, double tol) {
    auto deg = g.regularity();
    if (!deg) throw std::invalid_argument("cheeger_spectral_bound requires a regular graph");
    return (static_cast<double>(*deg) - adjacency_lambda2(g, tol)) / 2.0;
}

double cheeger_lower_bound(const Graph& g, int exact_cap, double tol) {
    double spectral = cheeger_spectral_bound(g, tol);
    if (g.vertex_count() <= exact_cap) {
        double exact = cheeger_exact(g, exact_cap).value();
        return std::min(exact, spectral);
    }
    return spectral;
}

GraphStats graph_stats(const Graph& g, int cheeger_exact_cap) {
    GraphStats s;
    s.girth = girth(g);
    s.diameter = diameter(g);
    s.max_degree = g.max_degree();
    if (g.vertex_count() >= 2 && g.vertex_count() <= cheeger_exact_cap)
        s.cheeger_exact = cheeger_exact(g, cheeger_exact_cap);
    if (g.regularity() && g.is_simple() && g.vertex_count() >= 2 && is_connected(g))
        s.cheeger_lower_bound = cheeger_lower_bound(g, cheeger_exact_cap);
    return s;
}

}  // namespace mlab
