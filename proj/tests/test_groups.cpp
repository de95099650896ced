#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

#include <set>

using namespace burnside;

namespace {

// Independent closure oracle: raw permutation composition, no Cayley table.
std::set<Perm> brute_force_closure(unsigned degree, const std::vector<Perm>& gens) {
    std::set<Perm> closed{identity_perm(degree)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> current(closed.begin(), closed.end());
        for (const auto& a : current)
            for (const auto& g : gens)
                if (closed.insert(compose(g, a)).second) grew = true;
    }
    return closed;
}

// Independent subgroup oracle: test every subset of element indices.
std::set<std::vector<unsigned>> brute_force_subgroups(const FiniteGroup& g) {
    std::set<std::vector<unsigned>> subs;
    const std::size_t n = g.order();
    REQUIRE(n <= 12); // subset enumeration only
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<unsigned> members;
        for (unsigned e = 0; e < n; ++e)
            if (mask & (std::size_t(1) << e)) members.push_back(e);
        if (is_subgroup(g, Subgroup{members})) subs.insert(members);
    }
    return subs;
}

} // namespace

TEST_CASE("group closure from generators") {
    SECTION("single involution gives order 2") {
        auto g = FiniteGroup::from_generators(2, {perm_from_cycles(2, {{1, 2}})});
        CHECK(g->order() == 2);
        CHECK(g->mul(1, 1) == g->identity());
    }
    SECTION("S3 from a 3-cycle and a transposition") {
        std::vector<Perm> gens{perm_from_cycles(3, {{1, 2, 3}}),
                               perm_from_cycles(3, {{1, 2}})};
        auto g = FiniteGroup::from_generators(3, gens);
        auto oracle = brute_force_closure(3, gens);
        REQUIRE(g->order() == oracle.size());
        for (unsigned e = 0; e < g->order(); ++e)
            CHECK(oracle.count(g->perm(e)) == 1);
    }
    SECTION("empty generator list gives the trivial group") {
        auto g = FiniteGroup::from_generators(1, {});
        CHECK(g->order() == 1);
    }
    SECTION("rejects non-permutations") {
        CHECK_THROWS_AS(FiniteGroup::from_generators(2, {Perm{0, 0}}), NotAPermutation);
        CHECK_THROWS_AS(FiniteGroup::from_generators(3, {Perm{0, 1}}), NotAPermutation);
    }
    SECTION("enforces the order bound") {
        std::vector<Perm> gens{perm_from_cycles(3, {{1, 2, 3}}),
                               perm_from_cycles(3, {{1, 2}})};
        CHECK_THROWS_AS(FiniteGroup::from_generators(3, gens, 4), GroupTooLarge);
    }
}

TEST_CASE("Cayley table is a group") {
    for (const std::string& name : {"C4", "S3", "Q8"}) {
        auto g = preset_group(name);
        for (unsigned a = 0; a < g->order(); ++a) {
            CHECK(g->mul(g->identity(), a) == a);
            CHECK(g->mul(a, g->identity()) == a);
            CHECK(g->mul(a, g->inv(a)) == g->identity());
            for (unsigned b = 0; b < g->order(); ++b)
                for (unsigned c = 0; c < g->order(); ++c)
                    REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
        }
        // element order divides group order
        for (unsigned a = 0; a < g->order(); ++a)
            CHECK(g->order() % g->element_order(a) == 0);
    }
}

TEST_CASE("subgroup classes") {
    SECTION("C2 has two classes") {
        auto t = SubgroupClassTable::build(preset_group("C2"));
        REQUIRE(t.size() == 2);
        CHECK(t.cls(0).representative.order() == 1);
        CHECK(t.cls(1).representative.order() == 2);
    }
    SECTION("S3 classes match the subset-enumeration oracle") {
        auto g = preset_group("S3");
        auto t = SubgroupClassTable::build(g);
        auto oracle = brute_force_subgroups(*g);
        CHECK(t.total_subgroup_count() == oracle.size());
        REQUIRE(t.size() == 4);
        CHECK(t.cls(0).representative.order() == 1);
        CHECK(t.cls(1).representative.order() == 2);
        CHECK(t.cls(1).members.size() == 3);
        CHECK(t.cls(2).representative.order() == 3);
        CHECK(t.cls(3).representative.order() == 6);
        // every oracle subgroup lies in exactly one class
        for (const auto& members : oracle) {
            std::size_t hits = 0;
            for (std::size_t i = 0; i < t.size(); ++i)
                for (const auto& m : t.cls(i).members)
                    if (m.members == members) ++hits;
            CHECK(hits == 1);
        }
    }
    SECTION("trivial group has one class") {
        auto t = SubgroupClassTable::build(preset_group("C1"));
        CHECK(t.size() == 1);
    }
    SECTION("class order invariants across presets") {
        for (const auto& name : testutil::small_presets()) {
            auto g = preset_group(name);
            auto t = SubgroupClassTable::build(g);
            INFO(name);
            CHECK(t.cls(0).representative.order() == 1);
            CHECK(t.cls(t.size() - 1).representative.order() == g->order());
            std::size_t count = 0;
            for (std::size_t i = 0; i < t.size(); ++i) {
                const auto& c = t.cls(i);
                CHECK(g->order() % c.representative.order() == 0); // Lagrange
                // |class| = [G : N(H)]
                CHECK(c.members.size() ==
                      g->order() / normalizer(*g, c.representative).order());
                count += c.members.size();
                // conjugation maps the representative into the same class
                for (unsigned e = 0; e < g->order(); ++e) {
                    Subgroup conj = conjugate_subgroup(*g, c.representative, e);
                    CHECK(conj.order() == c.representative.order());
                    CHECK(is_subgroup(*g, conj));
                    CHECK(t.class_of(conj) == i);
                }
            }
            CHECK(count == t.total_subgroup_count());
        }
    }
    SECTION("independent of the generator presentation") {
        auto build = [](std::vector<std::vector<std::vector<unsigned>>> gens) {
            std::vector<Perm> perms;
            for (const auto& c : gens) perms.push_back(perm_from_cycles(3, c));
            return SubgroupClassTable::build(FiniteGroup::from_generators(3, perms));
        };
        auto t1 = build({{{1, 2, 3}}, {{1, 2}}});
        auto t2 = build({{{1, 3}}, {{2, 3}}});
        auto t3 = build({{{1, 2}}, {{1, 2, 3}}, {{1, 3}}});
        REQUIRE(t1.size() == t2.size());
        REQUIRE(t1.size() == t3.size());
        for (std::size_t i = 0; i < t1.size(); ++i) {
            // identical classes as sets of permutations
            auto perms_of = [](const SubgroupClassTable& t, std::size_t i) {
                std::set<std::vector<Perm>> out;
                for (const auto& m : t.cls(i).members) {
                    std::vector<Perm> ps;
                    for (unsigned e : m.members) ps.push_back(t.group().perm(e));
                    std::sort(ps.begin(), ps.end());
                    out.insert(ps);
                }
                return out;
            };
            CHECK(perms_of(t1, i) == perms_of(t2, i));
            CHECK(perms_of(t1, i) == perms_of(t3, i));
        }
    }
}

TEST_CASE("double cosets") {
    auto c2 = preset_group("C2");
    SECTION("trivial subgroups of C2") {
        auto reps = double_cosets(*c2, trivial_subgroup(*c2), trivial_subgroup(*c2));
        CHECK(reps.size() == 2);
        reps = double_cosets(*c2, trivial_subgroup(*c2), full_subgroup(*c2));
        CHECK(reps.size() == 1);
    }
    SECTION("S3 with H = K = <(1 2)>") {
        auto g = preset_group("S3");
        Subgroup h = generated_subgroup(*g, {g->index_of(perm_from_cycles(3, {{1, 2}}))});
        auto reps = double_cosets(*g, h, h);
        REQUIRE(reps.size() == 2);
        std::multiset<std::size_t> sizes;
        for (unsigned r : reps) sizes.insert(double_coset_size(*g, h, h, r));
        CHECK(sizes == std::multiset<std::size_t>{2, 4});
    }
    SECTION("partition invariants across presets") {
        std::mt19937 rng(7);
        for (const auto& name : {"S3", "D4", "A4", "C6"}) {
            auto g = preset_group(name);
            auto t = SubgroupClassTable::build(g);
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = 0; j < t.size(); ++j) {
                    const Subgroup& h = t.cls(i).representative;
                    const Subgroup& k = t.cls(j).representative;
                    auto reps = double_cosets(*g, h, k);
                    std::size_t covered = 0;
                    for (unsigned r : reps) {
                        std::size_t sz = double_coset_size(*g, h, k, r);
                        covered += sz;
                        Subgroup meet = intersect(h, conjugate_subgroup(*g, k, r));
                        CHECK(sz == h.order() * k.order() / meet.order());
                    }
                    CHECK(covered == g->order());
                }
        }
    }
    SECTION("rejects non-subgroups") {
        auto g = preset_group("S3");
        CHECK_THROWS_AS(double_cosets(*g, Subgroup{{1, 2}}, trivial_subgroup(*g)),
                        NotASubgroup);
    }
}

TEST_CASE("conjugation, normalizer, intersection") {
    auto g = preset_group("S3");
    Subgroup t12 = generated_subgroup(*g, {g->index_of(perm_from_cycles(3, {{1, 2}}))});
    Subgroup c3 = generated_subgroup(*g, {g->index_of(perm_from_cycles(3, {{1, 2, 3}}))});
    SECTION("conjugate of the trivial subgroup is itself") {
        for (unsigned e = 0; e < g->order(); ++e)
            CHECK(conjugate_subgroup(*g, trivial_subgroup(*g), e) == trivial_subgroup(*g));
    }
    SECTION("normalizer of <(1 2)> in S3 is itself") {
        CHECK(normalizer(*g, t12) == t12);
    }
    SECTION("C3 is normal in S3") {
        CHECK(normalizer(*g, c3) == full_subgroup(*g));
    }
    SECTION("intersection of <(1 2)> and <(1 2 3)> is trivial") {
        CHECK(intersect(t12, c3) == trivial_subgroup(*g));
    }
}

TEST_CASE("subgroup embedding") {
    auto g = preset_group("S3");
    Subgroup c3 = generated_subgroup(*g, {g->index_of(perm_from_cycles(3, {{1, 2, 3}}))});
    SubgroupEmbedding emb(g, c3);
    CHECK(emb.sub().order() == 3);
    for (unsigned a = 0; a < emb.sub().order(); ++a)
        for (unsigned b = 0; b < emb.sub().order(); ++b)
            CHECK(emb.to_ambient(emb.sub().mul(a, b)) ==
                  g->mul(emb.to_ambient(a), emb.to_ambient(b)));
    CHECK_THROWS_AS(emb.from_ambient(g->index_of(perm_from_cycles(3, {{1, 2}}))),
                    IndexOutOfRange);
}
