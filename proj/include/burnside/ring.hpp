#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "gset.hpp"
#include "intlinalg.hpp"

namespace burnside {

class BurnsideRing;

// An element of A(G): integer coefficients over subgroup classes in
// canonical class order, coefficient i counting orbits of type [G/H_i].
class BurnsideElement {
public:
    BurnsideElement(std::shared_ptr<const BurnsideRing> ring, IntVec coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

    const BurnsideRing& ring() const { return *ring_; }
    std::shared_ptr<const BurnsideRing> ring_ptr() const { return ring_; }
    const IntVec& coeffs() const { return coeffs_; }

    bool is_effective() const {
        for (const Int& c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    bool operator==(const BurnsideElement& other) const {
        return ring_ == other.ring_ && coeffs_ == other.coeffs_;
    }

private:
    std::shared_ptr<const BurnsideRing> ring_;
    IntVec coeffs_;
};

// The Burnside ring A(G) with its table of marks. Marks (fixed-point
// vectors over subgroup classes) give an injective ring homomorphism to
// the pointwise-product ring; the table is lower triangular in canonical
// class order, so the ghost map inverts by exact back-substitution.
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
public:
    static std::shared_ptr<const BurnsideRing>
    create(std::shared_ptr<const FiniteGroup> group) {
        auto ring = std::shared_ptr<BurnsideRing>(new BurnsideRing());
        ring->classes_ = SubgroupClassTable::build(std::move(group));
        ring->build_marks_table();
        return ring;
    }

    const FiniteGroup& group() const { return classes_.group(); }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return classes_.group_ptr(); }
    const SubgroupClassTable& classes() const { return classes_; }
    std::size_t rank() const { return classes_.size(); }

    // m[i][j] = |(G/H_i)^{K_j}|
    const Int& mark_entry(std::size_t i, std::size_t j) const { return marks_[i][j]; }

    BurnsideElement element(IntVec coeffs) const {
        if (coeffs.size() != rank())
            throw IndexOutOfRange("coefficient vector length does not match class count");
        return BurnsideElement(shared_from_this(), std::move(coeffs));
    }

    BurnsideElement zero() const { return element(IntVec(rank(), 0)); }

    BurnsideElement basis(std::size_t i) const {
        IntVec c(rank(), 0);
        c.at(i) = 1;
        return element(std::move(c));
    }

    // n * [G/G], the image of the integer n in A(G).
    BurnsideElement integer(const Int& n) const {
        IntVec c(rank(), 0);
        c.back() = n;
        return element(std::move(c));
    }

    BurnsideElement one() const { return integer(1); }

    BurnsideElement from_gset(const GSet& x) const {
        auto mult = orbit_decompose(classes_, x);
        IntVec c(mult.begin(), mult.end());
        return element(std::move(c));
    }

    IntVec marks(const BurnsideElement& x) const {
        require_element(x);
        IntVec v(rank(), 0);
        for (std::size_t j = 0; j < rank(); ++j)
            for (std::size_t i = 0; i < rank(); ++i)
                v[j] += x.coeffs()[i] * marks_[i][j];
        return v;
    }

    // Back-substitution against the triangular table of marks.
    BurnsideElement from_marks(const IntVec& v) const {
        if (v.size() != rank())
            throw IndexOutOfRange("marks vector length does not match class count");
        IntVec c(rank(), 0);
        for (std::size_t j = rank(); j-- > 0;) {
            Int residual = v[j];
            for (std::size_t i = j + 1; i < rank(); ++i)
                residual -= c[i] * marks_[i][j];
            if (residual % marks_[j][j] != 0)
                throw NotInLattice("marks vector is not in the image of A(G)");
            c[j] = residual / marks_[j][j];
        }
        return element(std::move(c));
    }

    bool in_lattice(const IntVec& v) const {
        if (v.size() != rank()) return false;
        IntVec c(rank(), 0);
        for (std::size_t j = rank(); j-- > 0;) {
            Int residual = v[j];
            for (std::size_t i = j + 1; i < rank(); ++i)
                residual -= c[i] * marks_[i][j];
            if (residual % marks_[j][j] != 0) return false;
            c[j] = residual / marks_[j][j];
        }
        return true;
    }

    BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) const {
        require_element(x);
        require_element(y);
        IntVec c(rank());
        for (std::size_t i = 0; i < rank(); ++i) c[i] = x.coeffs()[i] + y.coeffs()[i];
        return element(std::move(c));
    }

    BurnsideElement neg(const BurnsideElement& x) const {
        require_element(x);
        IntVec c(rank());
        for (std::size_t i = 0; i < rank(); ++i) c[i] = -x.coeffs()[i];
        return element(std::move(c));
    }

    BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y) const {
        IntVec mx = marks(x), my = marks(y);
        for (std::size_t i = 0; i < rank(); ++i) mx[i] *= my[i];
        return from_marks(mx); // products of G-sets are G-sets, so this succeeds
    }

    BurnsideElement pow(const BurnsideElement& x, unsigned long n) const {
        IntVec m = marks(x);
        for (Int& v : m) mpz_pow_ui(v.get_mpz_t(), v.get_mpz_t(), n);
        return from_marks(m);
    }

    // Exact divisibility: returns x with d * x = target if one exists.
    // On coordinates with nonzero mark of d the cofactor's mark is forced;
    // zero-mark coordinates stay free and integrality of a preimage is
    // decided by an integer linear solve against the table of marks.
    std::optional<BurnsideElement> divides(const BurnsideElement& d,
                                           const BurnsideElement& target) const {
        IntVec md = marks(d), mt = marks(target);
        IntMat a;
        IntVec b;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (md[j] == 0) {
                if (mt[j] != 0) return std::nullopt;
                continue; // free coordinate
            }
            if (mt[j] % md[j] != 0) return std::nullopt;
            IntVec row(rank());
            for (std::size_t i = 0; i < rank(); ++i) row[i] = marks_[i][j];
            a.push_back(std::move(row));
            b.push_back(mt[j] / md[j]);
        }
        if (a.empty()) return zero(); // d = 0 and target = 0
        auto c = solve_integer(std::move(a), b);
        if (!c) return std::nullopt;
        if (c->size() != rank()) c->resize(rank(), 0);
        return element(std::move(*c));
    }

    void require_element(const BurnsideElement& x) const {
        if (x.ring_ptr().get() != this)
            throw GroupMismatch("element belongs to a different Burnside ring");
    }

private:
    BurnsideRing() = default;

    void build_marks_table() {
        const std::size_t n = rank();
        marks_.assign(n, IntVec(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            GSet cosets = GSet::coset_space(group_ptr(), classes_.cls(i).representative);
            for (std::size_t j = 0; j < n; ++j)
                marks_[i][j] = static_cast<unsigned long>(
                    fixed_points(cosets, classes_.cls(j).representative));
        }
    }

    SubgroupClassTable classes_;
    IntMat marks_;
};

inline BurnsideElement operator+(const BurnsideElement& x, const BurnsideElement& y) {
    return x.ring().add(x, y);
}
inline BurnsideElement operator-(const BurnsideElement& x) { return x.ring().neg(x); }
inline BurnsideElement operator-(const BurnsideElement& x, const BurnsideElement& y) {
    return x.ring().add(x, x.ring().neg(y));
}
inline BurnsideElement operator*(const BurnsideElement& x, const BurnsideElement& y) {
    return x.ring().mul(x, y);
}

} // namespace burnside
