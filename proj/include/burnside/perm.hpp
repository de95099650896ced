#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace burnside {

// A permutation of {0, ..., n-1} stored as its image table.
using Perm = std::vector<unsigned>;

inline Perm identity_perm(unsigned degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

// (a * b)(x) = a(b(x))
inline Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline Perm invert(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<unsigned>(i);
    return r;
}

inline bool is_permutation(const Perm& p, unsigned degree) {
    if (p.size() != degree) return false;
    std::vector<bool> seen(degree, false);
    for (unsigned v : p) {
        if (v >= degree || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline void require_permutation(const Perm& p, unsigned degree) {
    if (!is_permutation(p, degree))
        throw NotAPermutation("generator is not a permutation of degree " +
                              std::to_string(degree));
}

// Builds a permutation from 1-based disjoint cycles, e.g. {{1,2,3},{4,5}}.
inline Perm perm_from_cycles(unsigned degree,
                             const std::vector<std::vector<unsigned>>& cycles) {
    Perm p = identity_perm(degree);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            unsigned from = cyc[i];
            unsigned to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > degree || to < 1 || to > degree)
                throw NotAPermutation("cycle point out of range");
            if (p[from - 1] != from - 1)
                throw NotAPermutation("cycles are not disjoint");
            p[from - 1] = to - 1;
        }
    }
    require_permutation(p, degree);
    return p;
}

} // namespace burnside
