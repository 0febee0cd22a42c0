#pragma once

#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

namespace mlab {

// A word over the alphabet S ∪ S⁻¹, encoded as nonzero integers:
// letter +i is the i-th generator, -i its inverse (1-based, i ≤ k).
using Word = std::vector<int>;

inline bool letters_in_range(std::span<const int> w, int k) {
    for (int x : w)
        if (x == 0 || std::abs(x) > k) return false;
    return true;
}

inline bool is_freely_reduced(std::span<const int> w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == -w[i + 1]) return false;
    return true;
}

// Freely reduced word; the unique normal form of a free-group element.
// Length equals the word-metric distance to the identity.
struct ReducedWord {
    Word letters;

    size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool operator==(const ReducedWord&) const = default;
};

// Single-pass cancellation: maintain the reduced prefix as a stack.
inline ReducedWord free_reduce(std::span<const int> w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (x == 0) throw std::invalid_argument("word letters must be nonzero");
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return ReducedWord{std::move(out)};
}

inline Word inverse_word(std::span<const int> w) {
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = -w[w.size() - 1 - i];
    return out;
}

inline Word concat(std::span<const int> a, std::span<const int> b) {
    Word out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Cyclic reduction: strip cancelling first/last pairs of a reduced word.
inline ReducedWord cyclically_reduce(ReducedWord w) {
    size_t lo = 0, hi = w.letters.size();
    while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) {
        ++lo;
        --hi;
    }
    return ReducedWord{Word(w.letters.begin() + lo, w.letters.begin() + hi)};
}

}  // namespace mlab
