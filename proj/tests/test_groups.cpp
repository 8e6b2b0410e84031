#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "hspsim/errors.hpp"
#include "hspsim/groups.hpp"
#include "hspsim/numtheory.hpp"

using namespace hspsim;

namespace {

// Independent closure oracle: repeatedly add products until nothing new.
std::set<std::int64_t> closure_oracle_abelian(const AbelianGroup& g,
                                              const std::vector<std::int64_t>& gens) {
    std::set<std::int64_t> s{0};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::int64_t> cur(s.begin(), s.end());
        for (std::int64_t a : cur)
            for (std::int64_t x : gens)
                if (s.insert(g.add(a, x)).second) grew = true;
    }
    return s;
}

bool subgroup_axioms_hold(const FiniteGroup& g, const std::vector<std::int64_t>& elems) {
    std::set<std::int64_t> s(elems.begin(), elems.end());
    if (!s.count(0)) return false;
    for (std::int64_t a : elems) {
        if (!s.count(g.inverse(int(a)))) return false;
        for (std::int64_t b : elems)
            if (!s.count(g.multiply(int(a), int(b)))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("abelian group indexing round-trips") {
    const AbelianGroup g({3, 4, 5});
    CHECK(g.size() == 60);
    for (std::int64_t i = 0; i < g.size(); ++i) {
        const auto d = g.decode(i);
        REQUIRE(d.size() == 3);
        CHECK(d[0] == i / 20);
        CHECK(d[1] == i / 5 % 4);
        CHECK(d[2] == i % 5);
        CHECK(g.encode(d) == i);
    }
    // Componentwise addition mod the factor orders.
    const std::int64_t a = g.encode(std::vector<std::int64_t>{2, 3, 4});
    const std::int64_t b = g.encode(std::vector<std::int64_t>{1, 2, 3});
    const auto sum = g.decode(g.add(a, b));
    CHECK(sum == std::vector<std::int64_t>{0, 1, 2});
    CHECK(g.add(a, g.negate(a)) == 0);
}

TEST_CASE("abelian characters: numeric value and exact unity test agree") {
    for (const AbelianGroup& g : {AbelianGroup({12}), AbelianGroup({2, 4}),
                                  AbelianGroup({2, 2, 2}), AbelianGroup({3, 5})}) {
        for (std::int64_t l = 0; l < g.size(); ++l) {
            for (std::int64_t x = 0; x < g.size(); ++x) {
                const cplx v = g.character(l, x);
                CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
                CHECK(g.character_is_one(l, x) == (std::abs(v - cplx(1.0, 0.0)) < 1e-9));
                // Symmetry of the pairing.
                CHECK(std::abs(v - g.character(x, l)) < 1e-12);
            }
            // Multiplicativity chi_l(a+b) = chi_l(a) chi_l(b), spot checks.
            for (std::int64_t a = 0; a < std::min<std::int64_t>(g.size(), 8); ++a)
                for (std::int64_t b = 0; b < std::min<std::int64_t>(g.size(), 8); ++b)
                    CHECK(std::abs(g.character(l, g.add(a, b)) -
                                   g.character(l, a) * g.character(l, b)) < 1e-12);
        }
    }
}

TEST_CASE("subgroup closure in Z_12") {
    const AbelianGroup z12({12});
    const Subgroup k = subgroup_closure(z12, std::vector<std::int64_t>{3});
    CHECK(k.elements == std::vector<std::int64_t>{0, 3, 6, 9});
    CHECK(k.contains(6));
    CHECK(!k.contains(4));
    const Subgroup trivial = subgroup_closure(z12, {});
    CHECK(trivial.elements == std::vector<std::int64_t>{0});
}

TEST_CASE("subgroup closure in Z_2 x Z_2") {
    const AbelianGroup g({2, 2});
    // Element 3 = (1,1).
    const Subgroup k = subgroup_closure(g, std::vector<std::int64_t>{3});
    CHECK(k.elements == std::vector<std::int64_t>{0, 3});
}

TEST_CASE("subgroup closure matches an independent oracle") {
    const AbelianGroup g({4, 6});
    for (std::int64_t a = 0; a < g.size(); ++a) {
        for (std::int64_t b = 0; b < g.size(); ++b) {
            const std::vector<std::int64_t> gens{a, b};
            const Subgroup k = subgroup_closure(g, gens);
            const auto expect = closure_oracle_abelian(g, gens);
            CHECK(k.elements == std::vector<std::int64_t>(expect.begin(), expect.end()));
        }
    }
}

TEST_CASE("annihilator of multiples of d in Z_n") {
    const AbelianGroup z12({12});
    // K = <3> = {0,3,6,9}; annihilator = labels l with 3l = 0 mod 12 = {0,4,8}.
    const Subgroup k = subgroup_closure(z12, std::vector<std::int64_t>{3});
    const Subgroup ann = annihilator(z12, k);
    CHECK(ann.elements == std::vector<std::int64_t>{0, 4, 8});
    // Trivial subgroup annihilates to everything; full group to {0}.
    CHECK(annihilator(z12, subgroup_closure(z12, {})).size() == 12);
    CHECK(annihilator(z12, subgroup_closure(z12, std::vector<std::int64_t>{1})).elements ==
          std::vector<std::int64_t>{0});
}

TEST_CASE("annihilator sizes multiply and double dual recovers the subgroup") {
    for (const AbelianGroup& g : {AbelianGroup({8}), AbelianGroup({2, 4}),
                                  AbelianGroup({2, 2, 2}), AbelianGroup({12}),
                                  AbelianGroup({3, 3}), AbelianGroup({2, 3, 4})}) {
        // Enumerate every subgroup by closing every subset of a generator sweep.
        std::set<std::vector<std::int64_t>> seen;
        for (std::int64_t a = 0; a < g.size(); ++a) {
            for (std::int64_t b = 0; b < g.size(); ++b) {
                const Subgroup k = subgroup_closure(g, std::vector<std::int64_t>{a, b});
                if (!seen.insert(k.elements).second) continue;
                const Subgroup ann = annihilator(g, k);
                CHECK(ann.size() * k.size() == g.size());
                const Subgroup back = annihilator(g, ann);
                CHECK(back.elements == k.elements);
                // Reconstruction from the full dual list is the same intersection.
                const Subgroup rec = reconstruct_from_dual_samples(g, ann.elements);
                CHECK(rec.elements == k.elements);
            }
        }
    }
}

TEST_CASE("cosets partition the abelian group") {
    const AbelianGroup g({4, 3});
    const Subgroup k = subgroup_closure(g, std::vector<std::int64_t>{g.encode(std::vector<std::int64_t>{2, 0})});
    const auto parts = coset_partition(g, k);
    CHECK(std::int64_t(parts.size()) * k.size() == g.size());
    std::set<std::int64_t> all;
    for (const Coset& c : parts) {
        CHECK(std::int64_t(c.elements.size()) == k.size());
        CHECK(std::binary_search(c.elements.begin(), c.elements.end(), c.representative));
        for (std::int64_t e : c.elements) CHECK(all.insert(e).second);
    }
    CHECK(std::int64_t(all.size()) == g.size());
    // coset_of picks the block containing the representative.
    const Coset c7 = coset_of(g, k, 7);
    CHECK(std::binary_search(c7.elements.begin(), c7.elements.end(), std::int64_t(7)));
}

TEST_CASE("finite group tables are groups") {
    const std::vector<FiniteGroup> gs = {
        FiniteGroup::cyclic(12),     FiniteGroup::abelian_product({2, 4}),
        FiniteGroup::dihedral(3),    FiniteGroup::dihedral(4),
        FiniteGroup::dihedral(5),    FiniteGroup::dihedral(6),
        FiniteGroup::symmetric(3),   FiniteGroup::symmetric(4),
    };
    for (const FiniteGroup& g : gs) {
        for (int a = 0; a < g.size(); ++a) {
            CHECK(g.multiply(a, 0) == a);
            CHECK(g.multiply(0, a) == a);
            CHECK(g.multiply(a, g.inverse(a)) == 0);
            CHECK(g.multiply(g.inverse(a), a) == 0);
        }
    }
    CHECK(FiniteGroup::dihedral(3).size() == 6);
    CHECK(FiniteGroup::dihedral(6).size() == 12);
    CHECK(FiniteGroup::symmetric(3).size() == 6);
    CHECK(FiniteGroup::symmetric(4).size() == 24);
    CHECK_THROWS_AS(FiniteGroup::dihedral(2), UnsupportedGroup);
    CHECK_THROWS_AS(FiniteGroup::dihedral(7), UnsupportedGroup);
    CHECK_THROWS_AS(FiniteGroup::symmetric(5), UnsupportedGroup);
}

TEST_CASE("symmetric group elements compose like permutations") {
    const FiniteGroup s4 = FiniteGroup::symmetric(4);
    REQUIRE(int(s4.perms.size()) == 24);
    for (int a = 0; a < 24; ++a) {
        for (int b = 0; b < 24; ++b) {
            const auto& pa = s4.perms[std::size_t(a)];
            const auto& pb = s4.perms[std::size_t(b)];
            std::vector<int> ab(4);
            for (int i = 0; i < 4; ++i) ab[std::size_t(i)] = pa[std::size_t(pb[std::size_t(i)])];
            CHECK(s4.perms[std::size_t(s4.multiply(a, b))] == ab);
        }
    }
}

TEST_CASE("conjugacy classes: counts and sizes") {
    CHECK(conjugacy_classes(FiniteGroup::dihedral(4)).size() == 5);
    CHECK(conjugacy_classes(FiniteGroup::symmetric(3)).size() == 3);
    CHECK(conjugacy_classes(FiniteGroup::symmetric(4)).size() == 5);
    CHECK(conjugacy_classes(FiniteGroup::cyclic(5)).size() == 5);
    // Class sizes sum to |G| and each class is closed under conjugation.
    for (const FiniteGroup& g : {FiniteGroup::dihedral(5), FiniteGroup::symmetric(4)}) {
        const auto classes = conjugacy_classes(g);
        std::int64_t total = 0;
        for (const auto& cls : classes) {
            total += std::int64_t(cls.size());
            for (int x : cls) {
                for (int t = 0; t < g.size(); ++t) {
                    const int y = g.multiply(g.multiply(t, x), g.inverse(t));
                    CHECK(std::find(cls.begin(), cls.end(), y) != cls.end());
                }
            }
        }
        CHECK(total == g.size());
    }
}

TEST_CASE("character tables satisfy the orthogonality relations") {
    const std::vector<FiniteGroup> gs = {
        FiniteGroup::cyclic(7),      FiniteGroup::abelian_product({2, 4}),
        FiniteGroup::dihedral(3),    FiniteGroup::dihedral(4),
        FiniteGroup::dihedral(5),    FiniteGroup::dihedral(6),
        FiniteGroup::symmetric(3),   FiniteGroup::symmetric(4),
    };
    for (const FiniteGroup& g : gs) {
        const CharacterTable t = character_table(g);
        const int n = g.size();
        // Burnside: sum of squared dims = |G|; #irreps = #classes.
        std::int64_t dim_sq = 0;
        for (int d : t.dims) dim_sq += std::int64_t(d) * d;
        CHECK(dim_sq == n);
        CHECK(t.irrep_count() == int(t.classes.size()));
        CHECK(t.dims[0] == 1);
        // Row orthogonality over elements.
        for (int i = 0; i < t.irrep_count(); ++i) {
            CHECK(std::abs(t.value(i, 0) - cplx(double(t.dims[std::size_t(i)]), 0.0)) < 1e-12);
            for (int j = 0; j < t.irrep_count(); ++j) {
                cplx acc = 0.0;
                for (int x = 0; x < n; ++x) acc += t.value(i, x) * std::conj(t.value(j, x));
                CHECK(std::abs(acc - cplx(i == j ? double(n) : 0.0, 0.0)) < 1e-9);
            }
        }
        // Column orthogonality: sum_i |chi_i(x)|^2 = |centralizer(x)| = |G|/|class(x)|.
        for (int x = 0; x < n; ++x) {
            double acc = 0.0;
            for (int i = 0; i < t.irrep_count(); ++i) acc += std::norm(t.value(i, x));
            CHECK(std::abs(acc - double(n) / double(t.classes[std::size_t(t.class_of[std::size_t(x)])].size())) < 1e-9);
        }
    }
}

TEST_CASE("dihedral subgroup conjugation and normality") {
    const FiniteGroup d4 = FiniteGroup::dihedral(4);
    // Find the rotation r (order 4) and a reflection s by inspecting orders.
    int r = -1, s = -1;
    for (int a = 1; a < d4.size(); ++a) {
        int order = 1, acc = a;
        while (acc != 0) { acc = d4.multiply(acc, a); ++order; }
        if (order == 4 && r < 0) r = a;
        if (order == 2 && s < 0 && d4.multiply(a, a) == 0) {
            // make sure it's a reflection: not the central rotation r^2
            s = a;
        }
    }
    REQUIRE(r >= 0);
    // r^2 is central; pick s as an involution that is not r^2.
    const int r2 = d4.multiply(r, r);
    for (int a = 1; a < d4.size(); ++a)
        if (a != r2 && d4.multiply(a, a) == 0) { s = a; break; }
    REQUIRE(s >= 0);

    const Subgroup center = subgroup_closure(d4, std::vector<std::int64_t>{r2});
    CHECK(center.size() == 2);
    CHECK(is_normal(d4, center));

    const Subgroup refl = subgroup_closure(d4, std::vector<std::int64_t>{s});
    CHECK(refl.size() == 2);
    CHECK(!is_normal(d4, refl));
    // Conjugating {e, s} by r gives {e, r s r^-1} = {e, r^2 s}.
    const Subgroup conj = conjugate_subgroup(d4, refl, r);
    const int rsr = d4.multiply(d4.multiply(r, s), d4.inverse(r));
    CHECK(conj.elements == std::vector<std::int64_t>({0, rsr}));
    CHECK(rsr == d4.multiply(r2, s));
    // The rotation subgroup has index 2, hence normal.
    CHECK(is_normal(d4, subgroup_closure(d4, std::vector<std::int64_t>{r})));
}

TEST_CASE("kernels of characters are normal subgroups") {
    for (const FiniteGroup& g : {FiniteGroup::dihedral(4), FiniteGroup::dihedral(6),
                                 FiniteGroup::symmetric(3), FiniteGroup::symmetric(4)}) {
        const CharacterTable t = character_table(g);
        for (int i = 0; i < t.irrep_count(); ++i) {
            const Subgroup ker = kernel_of_character(g, t, i);
            CHECK(subgroup_axioms_hold(g, ker.elements));
            CHECK(is_normal(g, ker));
            // Trivial irrep has full kernel.
            if (i == 0) CHECK(ker.size() == g.size());
        }
        // The intersection of all kernels is trivial (faithful table).
        Subgroup inter = kernel_of_character(g, t, 0);
        for (int i = 1; i < t.irrep_count(); ++i)
            inter = intersect(inter, kernel_of_character(g, t, i));
        CHECK(inter.size() == 1);
    }
}

TEST_CASE("sign character of S_n has kernel A_n") {
    const FiniteGroup s4 = FiniteGroup::symmetric(4);
    const CharacterTable t = character_table(s4);
    // Find the sign irrep: dimension 1, not trivial, real values.
    int sign = -1;
    for (int i = 1; i < t.irrep_count(); ++i) {
        if (t.dims[std::size_t(i)] != 1) continue;
        bool all_pm1 = true;
        for (int x = 0; x < s4.size(); ++x)
            if (std::abs(std::abs(t.value(i, x).real()) - 1.0) > 1e-12 ||
                std::abs(t.value(i, x).imag()) > 1e-12)
                all_pm1 = false;
        if (all_pm1) { sign = i; break; }
    }
    REQUIRE(sign >= 0);
    const Subgroup ker = kernel_of_character(s4, t, sign);
    CHECK(ker.size() == 12);
    CHECK(is_normal(s4, ker));
}

TEST_CASE("left cosets partition finite groups") {
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (const Subgroup& k : all_subgroups(s3)) {
        const auto parts = left_coset_partition(s3, k);
        CHECK(std::int64_t(parts.size()) * k.size() == s3.size());
        std::set<std::int64_t> all;
        for (const Coset& c : parts)
            for (std::int64_t e : c.elements) CHECK(all.insert(e).second);
        CHECK(int(all.size()) == s3.size());
    }
    // left_coset of a fixed representative contains it.
    const Subgroup k2 = subgroup_closure(s3, std::vector<std::int64_t>{1});
    const Coset c = left_coset(s3, k2, 4);
    CHECK(std::binary_search(c.elements.begin(), c.elements.end(), std::int64_t(4)));
}

TEST_CASE("all_subgroups finds the textbook counts") {
    CHECK(all_subgroups(FiniteGroup::cyclic(12)).size() == 6);   // divisors of 12
    CHECK(all_subgroups(FiniteGroup::dihedral(3)).size() == 6);
    CHECK(all_subgroups(FiniteGroup::dihedral(4)).size() == 10);
    CHECK(all_subgroups(FiniteGroup::symmetric(3)).size() == 6);
    CHECK(all_subgroups(FiniteGroup::symmetric(4)).size() == 30);
    // Each is genuinely a subgroup, and the list is duplicate-free.
    for (const FiniteGroup& g : {FiniteGroup::dihedral(4), FiniteGroup::symmetric(4)}) {
        const auto subs = all_subgroups(g);
        std::set<std::vector<std::int64_t>> seen;
        for (const Subgroup& k : subs) {
            CHECK(subgroup_axioms_hold(g, k.elements));
            CHECK(seen.insert(k.elements).second);
            CHECK(g.size() % k.size() == 0);  // Lagrange
        }
    }
}

TEST_CASE("intersect computes set intersection of subgroups") {
    const FiniteGroup d6 = FiniteGroup::dihedral(6);
    const auto subs = all_subgroups(d6);
    for (const Subgroup& a : subs) {
        for (const Subgroup& b : subs) {
            const Subgroup i = intersect(a, b);
            std::vector<std::int64_t> expect;
            std::set_intersection(a.elements.begin(), a.elements.end(),
                                  b.elements.begin(), b.elements.end(),
                                  std::back_inserter(expect));
            CHECK(i.elements == expect);
            CHECK(subgroup_axioms_hold(d6, i.elements));
        }
    }
}
