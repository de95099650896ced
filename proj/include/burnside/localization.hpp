#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "errors.hpp"
#include "norms.hpp"
#include "ring.hpp"

namespace burnside {

// The set S of degree-zero elements to invert, with search bounds.
struct LocalizationProblem {
    std::shared_ptr<const BurnsideRing> ring;
    std::vector<BurnsideElement> generators; // S, nonempty, all over ring
    unsigned max_power = 64; // product-length bound when |S| == 1
    unsigned max_word = 8;   // total-degree bound for mixed products
};

inline void require_problem(const LocalizationProblem& p) {
    if (p.generators.empty())
        throw IndexOutOfRange("generator set S must be nonempty");
    for (const auto& s : p.generators) p.ring->require_element(s);
}

struct NormedGenerator {
    std::size_t subgroup_class;
    std::size_t generator_index;
    BurnsideElement value; // N^G_H(res_H s)
};

// One divisibility certificate: value * cofactor = prod_i s_i^{exponents[i]}.
struct Witness {
    std::size_t subgroup_class;
    std::size_t generator_index;
    BurnsideElement normed;
    std::vector<unsigned> exponents; // per generator, total >= 1
    BurnsideElement cofactor;
};

// A coordinate where the normed generator's mark vanishes while every
// generator's mark is nonzero: no product of generators is a multiple.
struct Obstruction {
    std::size_t subgroup_class;
    std::size_t generator_index;
    std::size_t coordinate;
};

struct Verdict {
    enum class Kind { Safe, Unsafe, Unknown } kind;
    std::vector<Witness> witnesses; // complete when Safe, partial when Unknown
    std::optional<Obstruction> obstruction;                      // Unsafe only
    std::optional<std::pair<std::size_t, std::size_t>> exhausted; // Unknown only

    bool safe() const { return kind == Kind::Safe; }
};

inline std::vector<std::shared_ptr<const SubgroupContext>>
class_contexts(const std::shared_ptr<const BurnsideRing>& ring) {
    std::vector<std::shared_ptr<const SubgroupContext>> out;
    out.reserve(ring->rank());
    for (std::size_t i = 0; i < ring->rank(); ++i)
        out.push_back(std::make_shared<SubgroupContext>(
            ring, ring->classes().cls(i).representative));
    return out;
}

// N^G_H(res_H s) for every subgroup class H and every s in S. Under
// ordinary products these generate every indexed product of S-elements.
inline std::vector<NormedGenerator> norm_generators(const LocalizationProblem& p) {
    require_problem(p);
    auto contexts = class_contexts(p.ring);
    std::vector<NormedGenerator> out;
    for (std::size_t c = 0; c < contexts.size(); ++c)
        for (std::size_t s = 0; s < p.generators.size(); ++s)
            out.push_back(NormedGenerator{
                c, s, norm(*contexts[c], restrict_to(*contexts[c], p.generators[s]))});
    return out;
}

namespace detail {

// Next exponent vector with the same total degree, lexicographic order;
// false once exhausted.
inline bool next_composition(std::vector<unsigned>& e) {
    const std::size_t m = e.size();
    if (m == 1) return false;
    // Move one unit from the rightmost movable position into the next slot.
    std::size_t i = m - 1;
    while (i > 0 && e[i] == 0) --i;
    if (i == 0) return false;
    unsigned tail = e[i];
    e[i] = 0;
    e[i - 1] += 1;
    e[m - 1] = tail - 1;
    return true;
}

inline std::vector<unsigned> first_composition(std::size_t m, unsigned total) {
    std::vector<unsigned> e(m, 0);
    e[m - 1] = total;
    return e;
}

} // namespace detail

// Decides the localization criterion: every indexed product of S-elements
// must divide an ordinary product of S-elements. Reduced to one bounded
// divisibility search per (subgroup class, generator) pair.
inline Verdict check_criterion(const LocalizationProblem& p) {
    require_problem(p);
    const BurnsideRing& ring = *p.ring;
    std::vector<IntVec> gen_marks;
    for (const auto& s : p.generators) gen_marks.push_back(ring.marks(s));
    const unsigned bound = p.generators.size() == 1 ? p.max_power : p.max_word;

    Verdict verdict{Verdict::Kind::Safe, {}, std::nullopt, std::nullopt};
    for (const auto& ng : norm_generators(p)) {
        IntVec md = ring.marks(ng.value);
        for (std::size_t k = 0; k < md.size(); ++k) {
            if (md[k] != 0) continue;
            bool all_nonzero = true;
            for (const auto& gm : gen_marks)
                if (gm[k] == 0) { all_nonzero = false; break; }
            if (all_nonzero)
                return Verdict{Verdict::Kind::Unsafe, {},
                               Obstruction{ng.subgroup_class, ng.generator_index, k},
                               std::nullopt};
        }

        bool found = false;
        for (unsigned total = 1; total <= bound && !found; ++total) {
            auto e = detail::first_composition(p.generators.size(), total);
            do {
                // marks of prod_i s_i^{e_i}, pointwise
                IntVec mp(ring.rank(), 1);
                for (std::size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 0) continue;
                    for (std::size_t k = 0; k < mp.size(); ++k) {
                        Int pw;
                        mpz_pow_ui(pw.get_mpz_t(), gen_marks[i][k].get_mpz_t(), e[i]);
                        mp[k] *= pw;
                    }
                }
                BurnsideElement prod = ring.from_marks(mp);
                if (auto cof = ring.divides(ng.value, prod)) {
                    verdict.witnesses.push_back(Witness{ng.subgroup_class,
                                                        ng.generator_index, ng.value,
                                                        e, std::move(*cof)});
                    found = true;
                    break;
                }
            } while (detail::next_composition(e));
        }
        if (!found && verdict.kind == Verdict::Kind::Safe) {
            verdict.kind = Verdict::Kind::Unknown;
            verdict.exhausted = {ng.subgroup_class, ng.generator_index};
        }
    }
    return verdict;
}

// Per-class result for inverting an integer n: the least k with
// N^G_H(n) | n^k, and the cofactor.
struct InvertRow {
    std::size_t subgroup_class;
    unsigned exponent;
    BurnsideElement normed;
    BurnsideElement cofactor;
};

struct InvertReport {
    Verdict verdict;
    std::vector<InvertRow> rows; // one per class when Safe
};

inline InvertReport invert_integer_report(std::shared_ptr<const BurnsideRing> ring,
                                          const Int& n, unsigned max_power = 64) {
    if (n < 2) throw IndexOutOfRange("n must be at least 2");
    LocalizationProblem p{ring, {ring->integer(n)}, max_power, max_power};
    InvertReport report{check_criterion(p), {}};
    for (const auto& w : report.verdict.witnesses)
        report.rows.push_back(InvertRow{w.subgroup_class, w.exponents[0], w.normed,
                                        w.cofactor});
    return report;
}

// The degree-zero multiplicative-closure fragment reachable from S by at
// most `depth` rounds of {restrict to a class then norm back, binary
// product}. Deduplicated, deterministic order (lex coefficient vectors).
inline std::vector<BurnsideElement>
closure_enumerate(const LocalizationProblem& p, unsigned depth,
                  std::size_t cap = 100000) {
    require_problem(p);
    if (depth < 1) throw IndexOutOfRange("depth must be at least 1");
    auto contexts = class_contexts(p.ring);
    std::set<IntVec> current;
    for (const auto& s : p.generators) current.insert(s.coeffs());
    for (unsigned step = 0; step < depth; ++step) {
        std::set<IntVec> next = current;
        for (const auto& xc : current) {
            BurnsideElement x = p.ring->element(xc);
            for (const auto& ctx : contexts)
                next.insert(norm(*ctx, restrict_to(*ctx, x)).coeffs());
            for (const auto& yc : current)
                next.insert((x * p.ring->element(yc)).coeffs());
            if (next.size() > cap)
                throw SizeExceeded("closure enumeration exceeds the cap");
        }
        if (next == current) break;
        current = std::move(next);
    }
    std::vector<BurnsideElement> out;
    out.reserve(current.size());
    for (const auto& c : current) out.push_back(p.ring->element(c));
    return out;
}

} // namespace burnside
