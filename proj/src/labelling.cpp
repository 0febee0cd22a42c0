#include "mlab/labelling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mlab/rng.hpp"

namespace mlab {

Labelling random_labelling(const Graph& g, Alphabet alphabet, uint64_t seed) {
    if (alphabet.k < 1) throw std::invalid_argument("alphabet needs k >= 1");
    Rng rng = derive_rng(seed, seed_tag::labelling);
    Labelling lab;
    lab.k = alphabet.k;
    lab.letters.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        uint64_t u = rng.below(static_cast<uint64_t>(2 * alphabet.k));
        int idx = static_cast<int>(u);  // 0..2k-1
        lab.letters[e] = (idx < alphabet.k) ? idx + 1 : -(idx - alphabet.k + 1);
    }
    return lab;
}

bool labelling_consistent(const Graph& g, const Labelling& lab) {
    if (static_cast<int>(lab.letters.size()) != g.edge_count()) return false;
    for (OrientedEdgeId e = 0; e < g.oriented_edge_count(); ++e) {
        if (lab.label(Graph::inverse(e)) != -lab.label(e)) return false;
        if (lab.label(e) == 0 || std::abs(lab.label(e)) > lab.k) return false;
    }
    return true;
}

Word read_label(const Graph& g, const Labelling& lab, std::span<const OrientedEdgeId> path) {
    if (!is_edge_path(g, path)) throw std::invalid_argument("path is not edge-consecutive");
    Word w;
    w.reserve(path.size());
    for (OrientedEdgeId e : path) w.push_back(lab.label(e));
    return w;
}

namespace {

struct DfsFrame {
    VertexId vertex;
    size_t next_choice;
    std::vector<OrientedEdgeId> order;  // shuffled outgoing edges
};

}  // namespace

std::vector<OrientedEdgeId> longest_simple_path(const Graph& g, long budget, uint64_t seed) {
    if (g.vertex_count() == 0) return {};
    if (!is_connected(g)) throw std::invalid_argument("longest_simple_path requires a connected graph");
    Rng rng = derive_rng(seed, seed_tag::simple_path);

    std::vector<OrientedEdgeId> best;
    std::vector<char> on_path(g.vertex_count(), 0);
    long expansions = 0;

    while (expansions < budget) {
        VertexId start = static_cast<VertexId>(rng.below(g.vertex_count()));
        std::fill(on_path.begin(), on_path.end(), 0);
        std::vector<DfsFrame> stack;
        std::vector<OrientedEdgeId> path;
        on_path[start] = 1;
        stack.push_back({start, 0, {}});
        auto shuffled_out = [&](VertexId v) {
            auto out = g.out_edges(v);
            std::vector<OrientedEdgeId> order(out.begin(), out.end());
            for (size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng.below(i)]);
            return order;
        };
        stack.back().order = shuffled_out(start);

        while (!stack.empty() && expansions < budget) {
            DfsFrame& top = stack.back();
            if (path.size() > best.size()) best = path;
            bool advanced = false;
            while (top.next_choice < top.order.size()) {
                OrientedEdgeId e = top.order[top.next_choice++];
                VertexId w = g.target(e);
                if (on_path[w]) continue;
                ++expansions;
                on_path[w] = 1;
                path.push_back(e);
                stack.push_back({w, 0, shuffled_out(w)});
                advanced = true;
                break;
            }
            if (!advanced) {
                on_path[top.vertex] = 0;
                stack.pop_back();
                if (!path.empty()) path.pop_back();
            }
        }
        if (best.size() + 1 == static_cast<size_t>(g.vertex_count())) break;  // Hamiltonian
    }
    return best;
}

CoverageReport coverage_check(const Graph& g, const Labelling& lab, int len,
                              std::span<const OrientedEdgeId> path, size_t missing_cap) {
    if (len <= 0) throw std::invalid_argument("coverage_check needs len >= 1");
    // vertex-simple check
    {
        if (!is_edge_path(g, path)) throw std::invalid_argument("coverage_check: not an edge path");
        std::vector<char> seen(g.vertex_count(), 0);
        if (!path.empty()) seen[g.source(path.front())] = 1;
        for (OrientedEdgeId e : path) {
            VertexId t = g.target(e);
            if (seen[t]) throw std::invalid_argument("coverage_check: path is not simple");
            seen[t] = 1;
        }
    }
    const int base = 2 * lab.k;
    double total_d = std::pow(static_cast<double>(base), len);
    if (total_d > (1u << 30))
        throw std::invalid_argument("coverage_check: (2k)^len too large to enumerate");
    const long total = static_cast<long>(total_d + 0.5);

    auto letter_index = [&](int letter) {
        return letter > 0 ? letter - 1 : lab.k + (-letter - 1);  // 0..2k-1
    };
    Word fwd = read_label(g, lab, path);
    std::vector<char> present(total, 0);
    auto scan = [&](const Word& w) {
        if (static_cast<int>(w.size()) < len) return;
        long code = 0, mod = 1;
        for (int i = 0; i < len - 1; ++i) mod *= base;
        for (size_t i = 0; i < w.size(); ++i) {
            if (static_cast<long>(i) >= len) code %= mod;
            code = code * base + letter_index(w[i]);
            if (static_cast<long>(i) >= len - 1) present[code] = 1;
        }
    };
    scan(fwd);
    Word bwd = inverse_word(fwd);  // reverse traversal reads inverted letters
    scan(bwd);

    CoverageReport report;
    report.total = total;
    for (long c = 0; c < total; ++c) {
        if (present[c]) {
            ++report.realized;
        } else if (report.missing.size() < missing_cap) {
            Word w(len);
            long x = c;
            for (int i = len - 1; i >= 0; --i) {
                int idx = static_cast<int>(x % base);
                x /= base;
                w[i] = idx < lab.k ? idx + 1 : -(idx - lab.k + 1);
            }
            report.missing.push_back(std::move(w));
        }
    }
    report.covered = (report.realized == total);
    return report;
}

double missing_word_bound(long n, int k, double r) {
    if (n < 3) throw std::invalid_argument("missing_word_bound needs n >= 3");
    if (k < 1) throw std::invalid_argument("missing_word_bound needs k >= 1");
    long L = static_cast<long>(std::floor(r * std::log(static_cast<double>(n))));
    if (L < 1)
        throw std::invalid_argument("missing_word_bound: floor(r ln n) must be >= 1");
    long double log2k = std::log(static_cast<long double>(2 * k));
    long double q = std::exp(-static_cast<long double>(L) * log2k);  // (2k)^{-L}
    long double log_val =
        static_cast<long double>(L) * log2k + static_cast<long double>(n / L) * std::log1p(-q);
    long double val = std::exp(log_val);
    if (val > 1.0L) val = 1.0L;
    if (val < 0.0L) val = 0.0L;
    return static_cast<double>(val);
}

namespace {

// DFS over non-backtracking paths of length ≤ maxlen from start, tracking
// the freely reduced label. Within half the girth these are geodesics.
bool null_geodesic_from(const Graph& g, const Labelling& lab, VertexId start, int maxlen,
                        std::vector<OrientedEdgeId>& path, Word& reduced) {
    if (static_cast<int>(path.size()) >= 2 && reduced.empty()) return true;
    if (static_cast<int>(path.size()) == maxlen) return false;
    VertexId at = path.empty() ? start : g.target(path.back());
    for (OrientedEdgeId e : g.out_edges(at)) {
        if (!path.empty() && e == Graph::inverse(path.back())) continue;
        int letter = lab.label(e);
        bool cancelled = !reduced.empty() && reduced.back() == -letter;
        if (cancelled)
            reduced.pop_back();
        else
            reduced.push_back(letter);
        path.push_back(e);
        if (null_geodesic_from(g, lab, start, maxlen, path, reduced)) return true;
        path.pop_back();
        if (cancelled)
            reduced.push_back(-letter);
        else
            reduced.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<OrientedEdgeId>> find_null_labelled_geodesic(const Graph& g,
                                                                       const Labelling& lab,
                                                                       int maxlen) {
    if (maxlen < 2) return std::nullopt;
    auto gir = girth(g);
    if (gir && maxlen * 2 > *gir)
        throw std::invalid_argument("find_null_labelled_geodesic needs maxlen <= girth/2");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<OrientedEdgeId> path;
        Word reduced;
        if (null_geodesic_from(g, lab, v, maxlen, path, reduced)) return path;
    }
    return std::nullopt;
}

}  // namespace mlab
