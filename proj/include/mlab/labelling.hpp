#pragma once

#include <cstdint>
#include <optional>

#include "mlab/graph.hpp"
#include "mlab/word.hpp"

namespace mlab {

struct Alphabet {
    int k;  // generators; letters are ±1..±k
};

// Edge labelling by S ∪ S⁻¹: one letter per geometric edge, the reverse
// orientation carries the inverse letter. This is exactly one uniform draw
// per geometric edge in the random model.
struct Labelling {
    int k = 0;
    std::vector<int> letters;  // per geometric edge, in construction order

    int label(OrientedEdgeId e) const { return (e & 1) ? -letters[e >> 1] : letters[e >> 1]; }
};

// Uniform i.i.d. labelling; deterministic given seed.
Labelling random_labelling(const Graph& g, Alphabet alphabet, uint64_t seed);

// Word read along an edge-consecutive path (unreduced).
Word read_label(const Graph& g, const Labelling& lab, std::span<const OrientedEdgeId> path);

// Randomized DFS with backtracking under a node-expansion budget; returns a
// vertex-simple path (no optimality claim). On cycles it always finds n-1.
std::vector<OrientedEdgeId> longest_simple_path(const Graph& g, long budget, uint64_t seed);

struct CoverageReport {
    bool covered = false;
    long realized = 0;
    long total = 0;
    std::vector<Word> missing;  // truncated at missing_cap
};

// Slides a length-len window over the path's label in both traversal
// directions and reports which of the (2k)^len unreduced words appear.
// covered=true certifies that every word of that length labels a simple
// path; covered=false only means the certificate failed on this path.
CoverageReport coverage_check(const Graph& g, const Labelling& lab, int len,
                              std::span<const OrientedEdgeId> path, size_t missing_cap = 64);

// Union-bound probability that some word of length ⌊r·ln n⌋ is missing from
// a uniform random word of length n: (2k)^L (1-(2k)^{-L})^{⌊n/L⌋}, clamped
// to [0,1]. Natural logarithm; evaluated in log space to dodge underflow.
double missing_word_bound(long n, int k, double r);

// Searches geodesics of length ≤ maxlen whose label freely reduces to the
// empty word. Requires maxlen ≤ girth/2 so that non-backtracking paths of
// that length are geodesics. Returns the first witness in scan order.
std::optional<std::vector<OrientedEdgeId>> find_null_labelled_geodesic(const Graph& g,
                                                                       const Labelling& lab,
                                                                       int maxlen);

// Invariant check: label(e⁻¹) = -label(e) for every oriented edge.
bool labelling_consistent(const Graph& g, const Labelling& lab);

}  // namespace mlab
