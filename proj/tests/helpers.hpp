#pragma once

#include <burnside/burnside.hpp>

#include <random>
#include <string>
#include <vector>

namespace testutil {

using namespace burnside;

inline const std::vector<std::string>& small_presets() {
    // every preset of order <= 24
    return preset_names();
}

inline IntVec random_coeffs(std::mt19937& rng, std::size_t rank, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntVec c(rank);
    for (auto& v : c) v = dist(rng);
    return c;
}

inline BurnsideElement random_element(std::mt19937& rng,
                                      const std::shared_ptr<const BurnsideRing>& ring,
                                      int lo = -3, int hi = 3) {
    return ring->element(random_coeffs(rng, ring->rank(), lo, hi));
}

// All orbit-multiplicity vectors with total point count <= max_points.
inline std::vector<std::vector<std::size_t>>
effective_multisets(const SubgroupClassTable& t, std::size_t max_points) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(t.size(), 0);
    auto rec = [&](auto&& self, std::size_t cls, std::size_t budget) -> void {
        if (cls == t.size()) {
            out.push_back(cur);
            return;
        }
        std::size_t orbit = t.group().order() / t.cls(cls).representative.order();
        for (std::size_t m = 0; m * orbit <= budget; ++m) {
            cur[cls] = m;
            self(self, cls + 1, budget - m * orbit);
        }
        cur[cls] = 0;
    };
    rec(rec, 0, max_points);
    return out;
}

// Disjoint union of coset spaces with the given multiplicities.
inline GSet realize(const SubgroupClassTable& t, const std::vector<std::size_t>& mult) {
    GSet x = GSet::empty(t.group_ptr());
    for (std::size_t i = 0; i < mult.size(); ++i) {
        GSet orbit = GSet::coset_space(t.group_ptr(), t.cls(i).representative);
        for (std::size_t m = 0; m < mult[i]; ++m) x = disjoint_union(x, orbit);
    }
    return x;
}

} // namespace testutil
