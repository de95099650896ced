#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace burnside {

// Fixed permutation generators for the named presets. Cyclic groups act on
// n points, D4 on the square's corners, Q8 by its regular representation
// (points 1..8 = 1, -1, i, -i, j, -j, k, -k).
inline std::optional<std::pair<unsigned, std::vector<std::vector<std::vector<unsigned>>>>>
preset_cycles(const std::string& name) {
    using Cycles = std::vector<std::vector<unsigned>>;
    if (name == "C1") return {{1u, std::vector<Cycles>{}}};
    if (name == "C2") return {{2u, {Cycles{{1, 2}}}}};
    if (name == "C3") return {{3u, {Cycles{{1, 2, 3}}}}};
    if (name == "C4") return {{4u, {Cycles{{1, 2, 3, 4}}}}};
    if (name == "C5") return {{5u, {Cycles{{1, 2, 3, 4, 5}}}}};
    if (name == "C6") return {{6u, {Cycles{{1, 2, 3, 4, 5, 6}}}}};
    if (name == "C2xC2") return {{4u, {Cycles{{1, 2}}, Cycles{{3, 4}}}}};
    if (name == "C2xC4") return {{6u, {Cycles{{1, 2}}, Cycles{{3, 4, 5, 6}}}}};
    if (name == "S3") return {{3u, {Cycles{{1, 2, 3}}, Cycles{{1, 2}}}}};
    if (name == "D4") return {{4u, {Cycles{{1, 2, 3, 4}}, Cycles{{1, 3}}}}};
    if (name == "Q8")
        return {{8u, {Cycles{{1, 3, 2, 4}, {5, 7, 6, 8}},
                      Cycles{{1, 5, 2, 6}, {3, 8, 4, 7}}}}};
    if (name == "A4") return {{4u, {Cycles{{1, 2, 3}}, Cycles{{1, 2}, {3, 4}}}}};
    if (name == "S4") return {{4u, {Cycles{{1, 2, 3, 4}}, Cycles{{1, 2}}}}};
    return std::nullopt;
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{
        "C1", "C2", "C3", "C4", "C5", "C6", "C2xC2",
        "C2xC4", "S3", "D4", "Q8", "A4", "S4"};
    return names;
}

inline std::shared_ptr<const FiniteGroup>
preset_group(const std::string& name, std::size_t order_bound = kDefaultOrderBound) {
    auto spec = preset_cycles(name);
    if (!spec) throw ParseError("unknown group preset: " + name);
    std::vector<Perm> gens;
    for (const auto& cycles : spec->second)
        gens.push_back(perm_from_cycles(spec->first, cycles));
    return FiniteGroup::from_generators(spec->first, gens, order_bound);
}

} // namespace burnside
