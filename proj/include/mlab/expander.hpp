#pragma once

#include <array>
#include <string>
#include <vector>

#include "mlab/graph.hpp"

namespace mlab {

// 2x2 matrix over Z/pZ, row-major.
using Mat2 = std::array<int, 4>;

struct Sl2Cayley {
    Graph graph;
    std::vector<Mat2> matrix_of;  // vertex id -> matrix, BFS order from identity
    int p = 0;
};

// Cayley graph of SL₂(Z/pZ) with generators (1 2;0 1) and (1 0;2 1) and
// their inverses. 4-regular, connected, p(p²-1) vertices. Vertex ids are
// assigned in BFS discovery order from the identity, so the layout is
// deterministic and seeds reproduce.
Sl2Cayley sl2_cayley(int p);

struct ExpanderFamilySpec {
    std::vector<int> primes;
    int degree = 4;
    double diameter_girth_ratio = 0.0;  // C: require diam <= C * girth
    double cheeger_floor = 0.0;         // h
    int subdivision = 1;                // j

    void validate() const;  // throws on malformed hypotheses
};

struct GraphValidation {
    std::string name;
    int vertices = 0;
    bool regular_ok = false;
    bool simple_ok = false;
    bool connected_ok = false;
    bool diameter_ok = false;
    bool cheeger_ok = false;
    int measured_degree = -1;
    std::optional<int> measured_girth;
    std::optional<int> measured_diameter;
    double measured_cheeger = 0.0;  // exact when small, spectral bound otherwise
    bool cheeger_is_exact = false;

    bool all_ok() const {
        return regular_ok && simple_ok && connected_ok && diameter_ok && cheeger_ok;
    }
};

struct ValidationReport {
    std::vector<GraphValidation> entries;
    bool all_ok() const;
};

// Checks each graph against the expander-family hypotheses. Failures are
// report entries, never exceptions.
ValidationReport validate_family(const ExpanderFamilySpec& spec, std::span<const Graph> graphs,
                                 int cheeger_exact_cap = 20);

}  // namespace mlab
