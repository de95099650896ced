#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "perm.hpp"

namespace burnside {

constexpr std::size_t kDefaultOrderBound = 384;

// A finite group given as a closed set of permutations with a Cayley table.
// Element 0 is always the identity; the element order is the breadth-first
// closure order from the identity, so it is determined by the generators.
class FiniteGroup {
public:
    static std::shared_ptr<const FiniteGroup>
    from_generators(unsigned degree, const std::vector<Perm>& generators,
                    std::size_t order_bound = kDefaultOrderBound) {
        for (const auto& g : generators) require_permutation(g, degree);
        FiniteGroup grp;
        grp.degree_ = degree;
        grp.elements_.push_back(identity_perm(degree));
        grp.index_[grp.elements_[0]] = 0;
        for (std::size_t i = 0; i < grp.elements_.size(); ++i) {
            for (const auto& g : generators) {
                Perm next = compose(g, grp.elements_[i]);
                if (grp.index_.count(next)) continue;
                if (grp.elements_.size() >= order_bound)
                    throw GroupTooLarge("group closure exceeds order bound " +
                                        std::to_string(order_bound));
                grp.index_[next] = static_cast<unsigned>(grp.elements_.size());
                grp.elements_.push_back(std::move(next));
            }
        }
        grp.build_tables();
        return std::make_shared<const FiniteGroup>(std::move(grp));
    }

    unsigned degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    unsigned identity() const { return 0; }

    unsigned mul(unsigned a, unsigned b) const { return mul_[a * order() + b]; }
    unsigned inv(unsigned a) const { return inverse_[a]; }
    unsigned conj(unsigned g, unsigned h) const { return mul(mul(g, h), inv(g)); }

    const Perm& perm(unsigned i) const { return elements_[i]; }

    unsigned index_of(const Perm& p) const {
        auto it = index_.find(p);
        if (it == index_.end())
            throw IndexOutOfRange("permutation is not an element of the group");
        return it->second;
    }

    unsigned element_order(unsigned i) const {
        unsigned e = i, n = 1;
        while (e != identity()) { e = mul(e, i); ++n; }
        return n;
    }

private:
    FiniteGroup() = default;

    void build_tables() {
        const std::size_t n = elements_.size();
        mul_.resize(n * n);
        inverse_.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                Perm p = compose(elements_[a], elements_[b]);
                unsigned idx = index_.at(p);
                mul_[a * n + b] = idx;
                if (idx == 0) inverse_[a] = static_cast<unsigned>(b);
            }
        }
    }

    unsigned degree_ = 1;
    std::vector<Perm> elements_;
    std::vector<unsigned> mul_;
    std::vector<unsigned> inverse_;
    std::map<Perm, unsigned> index_;

    friend class SubgroupEmbedding;
};

// A subgroup as a sorted set of element indices of the ambient group.
struct Subgroup {
    std::vector<unsigned> members; // sorted, duplicate-free

    std::size_t order() const { return members.size(); }
    bool contains(unsigned e) const {
        return std::binary_search(members.begin(), members.end(), e);
    }
    bool operator==(const Subgroup&) const = default;
    bool operator<(const Subgroup& other) const { return members < other.members; }
};

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
    if (h.members.empty() || !h.contains(g.identity())) return false;
    for (unsigned a : h.members)
        for (unsigned b : h.members)
            if (!h.contains(g.mul(a, b))) return false;
    return true;
}

inline void require_subgroup(const FiniteGroup& g, const Subgroup& h) {
    if (!is_subgroup(g, h))
        throw NotASubgroup("element set is not a subgroup");
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
    return Subgroup{{g.identity()}};
}

inline Subgroup full_subgroup(const FiniteGroup& g) {
    std::vector<unsigned> all(g.order());
    std::iota(all.begin(), all.end(), 0u);
    return Subgroup{std::move(all)};
}

// Closure of a seed set under multiplication.
inline Subgroup generated_subgroup(const FiniteGroup& g, std::vector<unsigned> seed) {
    std::set<unsigned> closed{g.identity()};
    std::vector<unsigned> work(seed.begin(), seed.end());
    for (unsigned e : seed) closed.insert(e);
    while (!work.empty()) {
        unsigned a = work.back();
        work.pop_back();
        for (unsigned b : std::set<unsigned>(closed)) {
            for (unsigned p : {g.mul(a, b), g.mul(b, a)}) {
                if (closed.insert(p).second) work.push_back(p);
            }
        }
    }
    return Subgroup{{closed.begin(), closed.end()}};
}

inline Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, unsigned by) {
    std::vector<unsigned> out;
    out.reserve(h.members.size());
    for (unsigned e : h.members) out.push_back(g.conj(by, e));
    std::sort(out.begin(), out.end());
    return Subgroup{std::move(out)};
}

inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
    require_subgroup(g, h);
    std::vector<unsigned> out;
    for (unsigned e = 0; e < g.order(); ++e)
        if (conjugate_subgroup(g, h, e) == h) out.push_back(e);
    return Subgroup{std::move(out)};
}

inline Subgroup intersect(const Subgroup& h, const Subgroup& k) {
    std::vector<unsigned> out;
    std::set_intersection(h.members.begin(), h.members.end(),
                          k.members.begin(), k.members.end(),
                          std::back_inserter(out));
    return Subgroup{std::move(out)};
}

// Lexicographically least conjugate of h; the canonical form of its
// conjugacy class.
inline Subgroup canonical_conjugate(const FiniteGroup& g, const Subgroup& h) {
    Subgroup best = h;
    for (unsigned e = 1; e < g.order(); ++e) {
        Subgroup c = conjugate_subgroup(g, h, e);
        if (c.members < best.members) best = std::move(c);
    }
    return best;
}

// One representative per double coset H g K, chosen as the least element
// index not yet covered. The cosets partition G.
inline std::vector<unsigned> double_cosets(const FiniteGroup& g,
                                           const Subgroup& h, const Subgroup& k) {
    require_subgroup(g, h);
    require_subgroup(g, k);
    std::vector<bool> covered(g.order(), false);
    std::vector<unsigned> reps;
    for (unsigned e = 0; e < g.order(); ++e) {
        if (covered[e]) continue;
        reps.push_back(e);
        for (unsigned a : h.members)
            for (unsigned b : k.members)
                covered[g.mul(g.mul(a, e), b)] = true;
    }
    return reps;
}

inline std::size_t double_coset_size(const FiniteGroup& g, const Subgroup& h,
                                     const Subgroup& k, unsigned rep) {
    std::set<unsigned> coset;
    for (unsigned a : h.members)
        for (unsigned b : k.members)
            coset.insert(g.mul(g.mul(a, rep), b));
    return coset.size();
}

// All subgroups: cyclic subgroups closed under pairwise joins.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<Subgroup> subs;
    for (unsigned e = 0; e < g.order(); ++e)
        subs.insert(generated_subgroup(g, {e}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subgroup> current(subs.begin(), subs.end());
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                std::vector<unsigned> seed = current[i].members;
                seed.insert(seed.end(), current[j].members.begin(),
                            current[j].members.end());
                if (subs.insert(generated_subgroup(g, std::move(seed))).second)
                    grew = true;
            }
        }
    }
    return {subs.begin(), subs.end()};
}

struct SubgroupClass {
    Subgroup representative;        // lex-least member of the class
    std::vector<Subgroup> members;  // the full conjugacy class, sorted
    std::size_t normalizer_quotient; // |N_G(H)| / |H|
};

// Conjugacy classes of subgroups in canonical order: ascending subgroup
// order, ties broken by the lex-least member set of the class. Class 0 is
// the trivial subgroup and the last class is G itself.
class SubgroupClassTable {
public:
    static SubgroupClassTable build(std::shared_ptr<const FiniteGroup> g) {
        SubgroupClassTable t;
        t.group_ = std::move(g);
        const FiniteGroup& grp = *t.group_;
        std::map<Subgroup, std::vector<Subgroup>> by_canon;
        for (auto& h : all_subgroups(grp))
            by_canon[canonical_conjugate(grp, h)].push_back(h);
        for (auto& [canon, members] : by_canon) {
            std::sort(members.begin(), members.end());
            std::size_t nq = normalizer(grp, canon).order() / canon.order();
            t.classes_.push_back(SubgroupClass{canon, members, nq});
        }
        std::sort(t.classes_.begin(), t.classes_.end(),
                  [](const SubgroupClass& a, const SubgroupClass& b) {
                      if (a.representative.order() != b.representative.order())
                          return a.representative.order() < b.representative.order();
                      return a.representative.members < b.representative.members;
                  });
        for (std::size_t i = 0; i < t.classes_.size(); ++i)
            t.canon_index_[t.classes_[i].representative] = i;
        return t;
    }

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    std::size_t size() const { return classes_.size(); }
    const SubgroupClass& cls(std::size_t i) const { return classes_.at(i); }

    std::size_t class_of(const Subgroup& h) const {
        auto it = canon_index_.find(canonical_conjugate(*group_, h));
        if (it == canon_index_.end())
            throw NotASubgroup("subgroup not found in class table");
        return it->second;
    }

    std::size_t total_subgroup_count() const {
        std::size_t n = 0;
        for (const auto& c : classes_) n += c.members.size();
        return n;
    }

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<SubgroupClass> classes_;
    std::map<Subgroup, std::size_t> canon_index_;
};

// A subgroup realized as a FiniteGroup of its own, with the index
// translation between the two element numberings.
class SubgroupEmbedding {
public:
    SubgroupEmbedding(std::shared_ptr<const FiniteGroup> ambient, Subgroup members)
        : ambient_(std::move(ambient)), members_(std::move(members)) {
        require_subgroup(*ambient_, members_);
        FiniteGroup sub;
        sub.degree_ = ambient_->degree();
        from_ambient_.assign(ambient_->order(), -1);
        for (unsigned e : members_.members) {
            from_ambient_[e] = static_cast<long>(sub.elements_.size());
            sub.index_[ambient_->perm(e)] = static_cast<unsigned>(sub.elements_.size());
            sub.elements_.push_back(ambient_->perm(e));
        }
        sub.build_tables();
        sub_ = std::make_shared<const FiniteGroup>(std::move(sub));
    }

    const FiniteGroup& ambient() const { return *ambient_; }
    std::shared_ptr<const FiniteGroup> ambient_ptr() const { return ambient_; }
    const FiniteGroup& sub() const { return *sub_; }
    std::shared_ptr<const FiniteGroup> sub_ptr() const { return sub_; }
    const Subgroup& members() const { return members_; }

    unsigned to_ambient(unsigned sub_index) const { return members_.members[sub_index]; }

    unsigned from_ambient(unsigned ambient_index) const {
        long v = from_ambient_[ambient_index];
        if (v < 0) throw IndexOutOfRange("element does not lie in the subgroup");
        return static_cast<unsigned>(v);
    }

    bool contains_ambient(unsigned ambient_index) const {
        return from_ambient_[ambient_index] >= 0;
    }

    // Translates a subgroup of H, given in H's numbering, into G's numbering.
    Subgroup subgroup_in_ambient(const Subgroup& h_sub) const {
        std::vector<unsigned> out;
        out.reserve(h_sub.members.size());
        for (unsigned e : h_sub.members) out.push_back(to_ambient(e));
        std::sort(out.begin(), out.end());
        return Subgroup{std::move(out)};
    }

    // Translates a subgroup of G contained in H into H's numbering.
    Subgroup subgroup_in_sub(const Subgroup& g_sub) const {
        std::vector<unsigned> out;
        out.reserve(g_sub.members.size());
        for (unsigned e : g_sub.members) out.push_back(from_ambient(e));
        std::sort(out.begin(), out.end());
        return Subgroup{std::move(out)};
    }

private:
    std::shared_ptr<const FiniteGroup> ambient_;
    Subgroup members_;
    std::shared_ptr<const FiniteGroup> sub_;
    std::vector<long> from_ambient_;
};

} // namespace burnside
