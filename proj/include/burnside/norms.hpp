#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "gset.hpp"
#include "ring.hpp"

namespace burnside {

// A subgroup H <= G together with the Burnside ring A(H), the index
// translation between numberings, and the class map A(H)-classes -> G-classes.
class SubgroupContext {
public:
    SubgroupContext(std::shared_ptr<const BurnsideRing> ambient, Subgroup members)
        : ambient_(std::move(ambient)),
          embedding_(ambient_->group_ptr(), std::move(members)),
          sub_ring_(BurnsideRing::create(embedding_.sub_ptr())) {
        class_map_.reserve(sub_ring_->rank());
        for (std::size_t i = 0; i < sub_ring_->rank(); ++i) {
            Subgroup in_g = embedding_.subgroup_in_ambient(
                sub_ring_->classes().cls(i).representative);
            class_map_.push_back(ambient_->classes().class_of(in_g));
        }
    }

    const BurnsideRing& ambient() const { return *ambient_; }
    std::shared_ptr<const BurnsideRing> ambient_ptr() const { return ambient_; }
    const BurnsideRing& sub_ring() const { return *sub_ring_; }
    std::shared_ptr<const BurnsideRing> sub_ring_ptr() const { return sub_ring_; }
    const SubgroupEmbedding& embedding() const { return embedding_; }
    const Subgroup& members() const { return embedding_.members(); }
    std::size_t class_in_ambient(std::size_t sub_class) const {
        return class_map_.at(sub_class);
    }

private:
    std::shared_ptr<const BurnsideRing> ambient_;
    SubgroupEmbedding embedding_;
    std::shared_ptr<const BurnsideRing> sub_ring_;
    std::vector<std::size_t> class_map_;
};

// res^G_H: marks of the result at K <= H equal marks of x at K viewed in G.
inline BurnsideElement restrict_to(const SubgroupContext& ctx, const BurnsideElement& x) {
    ctx.ambient().require_element(x);
    IntVec mg = ctx.ambient().marks(x);
    IntVec mh(ctx.sub_ring().rank());
    for (std::size_t i = 0; i < mh.size(); ++i) mh[i] = mg[ctx.class_in_ambient(i)];
    try {
        return ctx.sub_ring().from_marks(mh);
    } catch (const NotInLattice&) {
        throw IntegralityViolation("restriction left the lattice of A(H)");
    }
}

// N^G_H: the mark at K is the product over double cosets HgK of the mark of
// x at H n gKg^-1, taken in A(H). Agrees with coinduction on effective
// elements and extends it to all of A(H).
inline BurnsideElement norm(const SubgroupContext& ctx, const BurnsideElement& x) {
    ctx.sub_ring().require_element(x);
    const FiniteGroup& g = ctx.ambient().group();
    const Subgroup& h = ctx.members();
    IntVec mx = ctx.sub_ring().marks(x);
    IntVec out(ctx.ambient().rank());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const Subgroup& k = ctx.ambient().classes().cls(j).representative;
        Int value = 1;
        for (unsigned rep : double_cosets(g, h, k)) {
            Subgroup meet = intersect(h, conjugate_subgroup(g, k, rep));
            std::size_t cls = ctx.sub_ring().classes().class_of(
                ctx.embedding().subgroup_in_sub(meet));
            value *= mx[cls];
        }
        out[j] = value;
    }
    try {
        return ctx.ambient().from_marks(out);
    } catch (const NotInLattice&) {
        throw IntegralityViolation("norm left the lattice of A(G)");
    }
}

// A finite G-set of indices with one element of A(H_u) per orbit, H_u the
// orbit's stabilizer class representative. Each assignment lives over the
// sub-ring of the matching context.
struct IndexedFamily {
    GSet index_set;
    std::vector<std::shared_ptr<const SubgroupContext>> contexts;
    std::vector<BurnsideElement> assignments;
};

// Deterministic orbit order: ascending least point.
inline std::vector<std::size_t> orbit_class_indices(const SubgroupClassTable& classes,
                                                    const GSet& u) {
    std::vector<std::size_t> out;
    std::vector<bool> seen(u.size(), false);
    for (unsigned p = 0; p < u.size(); ++p) {
        if (seen[p]) continue;
        for (unsigned q : u.orbit_of(p)) seen[q] = true;
        out.push_back(classes.class_of(u.stabilizer(p)));
    }
    return out;
}

// prod_{u in U} x_u = prod over orbits of N^G_{H_u}(x_u); empty U gives 1.
inline BurnsideElement indexed_product(std::shared_ptr<const BurnsideRing> ring,
                                       const IndexedFamily& family) {
    if (family.index_set.group_ptr() != ring->group_ptr())
        throw GroupMismatch("index set lives over a different group");
    auto orbit_classes = orbit_class_indices(ring->classes(), family.index_set);
    if (orbit_classes.size() != family.assignments.size() ||
        orbit_classes.size() != family.contexts.size())
        throw IndexOutOfRange("one context and assignment required per orbit");
    BurnsideElement result = ring->one();
    for (std::size_t i = 0; i < orbit_classes.size(); ++i) {
        const SubgroupContext& ctx = *family.contexts[i];
        if (ctx.ambient_ptr() != ring ||
            ring->classes().class_of(ctx.members()) != orbit_classes[i])
            throw GroupMismatch("context does not match the orbit's stabilizer class");
        result = result * norm(ctx, family.assignments[i]);
    }
    return result;
}

} // namespace burnside
