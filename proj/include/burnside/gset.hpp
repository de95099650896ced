#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "group.hpp"

namespace burnside {

constexpr std::size_t kDefaultGSetSizeCap = 1000000;

// An explicit finite G-action: a table (element index, point) -> point.
class GSet {
public:
    GSet(std::shared_ptr<const FiniteGroup> group, std::size_t size,
         std::vector<unsigned> action)
        : group_(std::move(group)), size_(size), action_(std::move(action)) {}

    static GSet trivial(std::shared_ptr<const FiniteGroup> g, std::size_t n) {
        std::vector<unsigned> act(g->order() * n);
        for (std::size_t e = 0; e < g->order(); ++e)
            for (std::size_t p = 0; p < n; ++p)
                act[e * n + p] = static_cast<unsigned>(p);
        return GSet(std::move(g), n, std::move(act));
    }

    static GSet point(std::shared_ptr<const FiniteGroup> g) { return trivial(std::move(g), 1); }

    static GSet empty(std::shared_ptr<const FiniteGroup> g) { return trivial(std::move(g), 0); }

    // Left cosets gH with G acting by left translation.
    static GSet coset_space(std::shared_ptr<const FiniteGroup> g, const Subgroup& h) {
        require_subgroup(*g, h);
        const std::size_t n = g->order();
        std::vector<long> coset_of(n, -1);
        std::vector<unsigned> reps;
        for (unsigned e = 0; e < n; ++e) {
            if (coset_of[e] >= 0) continue;
            long id = static_cast<long>(reps.size());
            reps.push_back(e);
            for (unsigned m : h.members) coset_of[g->mul(e, m)] = id;
        }
        std::vector<unsigned> act(n * reps.size());
        for (unsigned e = 0; e < n; ++e)
            for (std::size_t p = 0; p < reps.size(); ++p)
                act[e * reps.size() + p] =
                    static_cast<unsigned>(coset_of[g->mul(e, reps[p])]);
        return GSet(std::move(g), reps.size(), std::move(act));
    }

    static GSet regular(std::shared_ptr<const FiniteGroup> g) {
        return coset_space(std::move(g), trivial_subgroup(*g));
    }

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    std::size_t size() const { return size_; }

    unsigned act(unsigned g, unsigned p) const { return action_[g * size_ + p]; }

    bool is_valid_action() const {
        const FiniteGroup& g = *group_;
        for (std::size_t p = 0; p < size_; ++p)
            if (act(g.identity(), static_cast<unsigned>(p)) != p) return false;
        for (unsigned a = 0; a < g.order(); ++a)
            for (unsigned b = 0; b < g.order(); ++b)
                for (std::size_t p = 0; p < size_; ++p) {
                    unsigned q = static_cast<unsigned>(p);
                    if (act(a, act(b, q)) != act(g.mul(a, b), q)) return false;
                }
        return true;
    }

    Subgroup stabilizer(unsigned p) const {
        std::vector<unsigned> out;
        for (unsigned e = 0; e < group_->order(); ++e)
            if (act(e, p) == p) out.push_back(e);
        return Subgroup{std::move(out)};
    }

    std::vector<unsigned> orbit_of(unsigned p) const {
        std::vector<bool> in(size_, false);
        std::vector<unsigned> orbit;
        for (unsigned e = 0; e < group_->order(); ++e) {
            unsigned q = act(e, p);
            if (!in[q]) { in[q] = true; orbit.push_back(q); }
        }
        std::sort(orbit.begin(), orbit.end());
        return orbit;
    }

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::size_t size_;
    std::vector<unsigned> action_; // [g * size_ + p]
};

inline void require_same_group(const GSet& x, const GSet& y) {
    if (x.group_ptr() != y.group_ptr())
        throw GroupMismatch("G-sets live over different groups");
}

inline std::size_t fixed_points(const GSet& x, const Subgroup& k) {
    require_subgroup(x.group(), k);
    std::size_t n = 0;
    for (std::size_t p = 0; p < x.size(); ++p) {
        bool fixed = true;
        for (unsigned e : k.members)
            if (x.act(e, static_cast<unsigned>(p)) != p) { fixed = false; break; }
        if (fixed) ++n;
    }
    return n;
}

inline GSet disjoint_union(const GSet& x, const GSet& y) {
    require_same_group(x, y);
    const std::size_t n = x.size() + y.size();
    std::vector<unsigned> act(x.group().order() * n);
    for (unsigned e = 0; e < x.group().order(); ++e) {
        for (std::size_t p = 0; p < x.size(); ++p)
            act[e * n + p] = x.act(e, static_cast<unsigned>(p));
        for (std::size_t p = 0; p < y.size(); ++p)
            act[e * n + x.size() + p] =
                static_cast<unsigned>(x.size()) + y.act(e, static_cast<unsigned>(p));
    }
    return GSet(x.group_ptr(), n, std::move(act));
}

inline GSet product(const GSet& x, const GSet& y) {
    require_same_group(x, y);
    const std::size_t n = x.size() * y.size();
    std::vector<unsigned> act(x.group().order() * n);
    for (unsigned e = 0; e < x.group().order(); ++e)
        for (std::size_t p = 0; p < x.size(); ++p)
            for (std::size_t q = 0; q < y.size(); ++q)
                act[e * n + p * y.size() + q] = static_cast<unsigned>(
                    x.act(e, static_cast<unsigned>(p)) * y.size() +
                    y.act(e, static_cast<unsigned>(q)));
    return GSet(x.group_ptr(), n, std::move(act));
}

// Orbit multiplicities per subgroup class, in canonical class order.
inline std::vector<std::size_t> orbit_decompose(const SubgroupClassTable& classes,
                                                const GSet& x) {
    if (classes.group_ptr() != x.group_ptr())
        throw GroupMismatch("class table and G-set live over different groups");
    std::vector<std::size_t> mult(classes.size(), 0);
    std::vector<bool> seen(x.size(), false);
    for (unsigned p = 0; p < x.size(); ++p) {
        if (seen[p]) continue;
        for (unsigned q : x.orbit_of(p)) seen[q] = true;
        ++mult[classes.class_of(x.stabilizer(p))];
    }
    return mult;
}

// Same points, action restricted to the subgroup.
inline GSet restrict_gset(const SubgroupEmbedding& emb, const GSet& x) {
    if (emb.ambient_ptr() != x.group_ptr())
        throw GroupMismatch("G-set does not live over the embedding's ambient group");
    const std::size_t n = x.size();
    std::vector<unsigned> act(emb.sub().order() * n);
    for (unsigned e = 0; e < emb.sub().order(); ++e)
        for (std::size_t p = 0; p < n; ++p)
            act[e * n + p] = x.act(emb.to_ambient(e), static_cast<unsigned>(p));
    return GSet(emb.sub_ptr(), n, std::move(act));
}

// Coinduction Map_H(G, X): H-equivariant maps f with f(hg) = h f(g), G acting
// by right translation of the argument. Realized as |X|^[G:H] tuples over a
// right-coset transversal of H.
inline GSet coinduce(const SubgroupEmbedding& emb, const GSet& x,
                     std::size_t size_cap = kDefaultGSetSizeCap) {
    if (emb.sub_ptr() != x.group_ptr())
        throw GroupMismatch("H-set does not live over the embedding's subgroup");
    const FiniteGroup& g = emb.ambient();
    const std::size_t n = g.order();

    // Right cosets H t, least-index representatives.
    std::vector<long> coset_of(n, -1);
    std::vector<unsigned> reps;
    for (unsigned e = 0; e < n; ++e) {
        if (coset_of[e] >= 0) continue;
        long id = static_cast<long>(reps.size());
        reps.push_back(e);
        for (unsigned m : emb.members().members) coset_of[g.mul(m, e)] = id;
    }
    const std::size_t m = reps.size();

    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (x.size() != 0 && total > size_cap / std::max<std::size_t>(x.size(), 1))
            throw SizeExceeded("coinduced G-set exceeds the size cap");
        total *= x.size();
    }
    if (total > size_cap) throw SizeExceeded("coinduced G-set exceeds the size cap");

    // For each (transversal index i, group element e): t_i e = h t_j.
    std::vector<unsigned> target(m * n), twist(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (unsigned e = 0; e < n; ++e) {
            unsigned te = g.mul(reps[i], e);
            unsigned j = static_cast<unsigned>(coset_of[te]);
            unsigned h = g.mul(te, g.inv(reps[j]));
            target[i * n + e] = j;
            twist[i * n + e] = emb.from_ambient(h);
        }

    std::vector<unsigned> act(n * total);
    std::vector<unsigned> tup(m), out(m);
    for (std::size_t p = 0; p < total; ++p) {
        std::size_t rem = p;
        for (std::size_t i = m; i-- > 0;) { tup[i] = rem % x.size(); rem /= x.size(); }
        for (unsigned e = 0; e < n; ++e) {
            for (std::size_t i = 0; i < m; ++i)
                out[i] = x.act(twist[i * n + e], tup[target[i * n + e]]);
            std::size_t q = 0;
            for (std::size_t i = 0; i < m; ++i) q = q * x.size() + out[i];
            act[e * total + p] = static_cast<unsigned>(q);
        }
    }
    return GSet(emb.ambient_ptr(), total, std::move(act));
}

} // namespace burnside
