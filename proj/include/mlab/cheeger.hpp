#pragma once

#include "mlab/graph.hpp"

namespace mlab {

// Exact Cheeger constant h(g) = min |∂A| / min(|A|,|V\A|) over proper
// nonempty A (∅ and V excluded: the ratio is undefined there). ∂A is the
// outer vertex boundary. Exhaustive over 2^|V| subsets; refuses |V| > cap.
Ratio cheeger_exact(const Graph& g, int cap = 20);

// (d - λ₂)/2 for a connected simple d-regular graph, λ₂ the second-largest
// adjacency eigenvalue (deflated power iteration, relative tolerance tol).
double cheeger_spectral_bound(const Graph& g, double tol = 1e-9);

// Shipped lower bound: min(exact, spectral) when the exact value is
// computable, else the spectral bound alone. The raw spectral form can
// exceed h when λ₂ < 0 (e.g. K₄), so it is clamped whenever possible.
double cheeger_lower_bound(const Graph& g, int exact_cap = 20, double tol = 1e-9);

// Second-largest adjacency eigenvalue of a connected regular graph.
double adjacency_lambda2(const Graph& g, double tol = 1e-9);

}  // namespace mlab
