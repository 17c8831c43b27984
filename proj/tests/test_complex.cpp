#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "satfloer/complexR.hpp"

#include <nlohmann/json.hpp>

using namespace satfloer;

TEST_CASE("trefoil complex verifies and has the expected invariants") {
    KnotComplexR c = fixtures::trefoil_complex();
    CHECK(verify(c).all_pass());
    Invariants inv = invariants(c);
    CHECK(inv.tau == 1);
    CHECK(inv.epsilon == 1);
    CHECK(inv.genus == 1);
    CHECK(inv.lspace);

    SUBCASE("bidegree violation is caught") {
        KnotComplexR bad = c;
        bad.set_entry(1, 2, Entry{Mono{0, 2}});  // Vc -> V^2 c
        CHECK_FALSE(verify(bad).all_pass());
    }
}

TEST_CASE("trefoil snake decomposition is one open chain a <-U b ->V c") {
    KnotComplexR c = fixtures::trefoil_complex();
    SnakeDecomposition dec = snake_decomposition(c);
    REQUIRE(dec.summands.size() == 1);
    CHECK(dec.open_chains() == 1);
    CHECK(dec.summands[0].gens.size() == 3);
    REQUIRE(dec.summands[0].arrows.size() == 2);
    // traversal starts from one end; arrows alternate U and V
    CHECK(dec.summands[0].arrows[0].is_u != dec.summands[0].arrows[1].is_u);
}

TEST_CASE("specializations of the trefoil have rank one") {
    KnotComplexR c = fixtures::trefoil_complex();
    auto h = specialize(c, Specialization::U1V0);
    auto v = specialize(c, Specialization::U0V1);
    CHECK(h.total_rank == 1);
    CHECK(v.total_rank == 1);
    // U1V0 homology is graded by gr_z and is generated by c (grz 2); U0V1 by
    // gr_w, generated by a (grw 2). In both cases the grading equals 2*tau.
    CHECK(h.rank_by_grading.count(2));
    CHECK(v.rank_by_grading.count(2));
}

TEST_CASE("cable (2,1) of trefoil: tau 2, not an L-space knot, single snake") {
    KnotComplexR c = fixtures::cable21_trefoil_complex();
    CHECK(verify(c).all_pass());
    Invariants inv = invariants(c);
    CHECK(inv.tau == 2);
    CHECK(inv.epsilon == 1);
    CHECK(inv.genus == 2);
    CHECK_FALSE(inv.lspace);
    // f_{2,1,0} is a homeomorphism of the plane, so the satellite curve stays
    // connected: the complex is a single length-7 open chain.
    SnakeDecomposition dec = snake_decomposition(c);
    CHECK(dec.open_chains() == 1);
    CHECK(dec.closed_chains() == 0);
    CHECK(dec.summands[0].gens.size() == 7);
}

TEST_CASE("reduce removes a unit pair and is deterministic") {
    KnotComplexR c;
    int x = c.add_gen("x", 0, 0);
    int y = c.add_gen("y", 1, 1);
    c.add_arrow(y, x, Mono{0, 0});
    KnotComplexR r = reduce(c);
    CHECK(r.size() == 0);

    SUBCASE("already-reduced input is unchanged") {
        KnotComplexR t = fixtures::trefoil_complex();
        KnotComplexR rt = reduce(t);
        CHECK(rt.size() == 3);
        CHECK(isomorphic(rt, t));
    }
    SUBCASE("zig-zag rewrites through the cancelled pair") {
        // w -> x (U), y -> x (1), y -> z (V): cancelling (y,x) creates w -> z? No:
        // the zig-zag is w -> x <- y -> z giving w -> z with U*V = 0. Check the
        // complex instead where the product survives.
        KnotComplexR k;
        int w = k.add_gen("w", 1, 1);
        int xx = k.add_gen("x", 0, 0);
        int yy = k.add_gen("y", 1, 1);
        int z = k.add_gen("z", 0, 2);
        k.add_arrow(w, xx, Mono{1, 0});
        k.add_arrow(yy, xx, Mono{0, 0});
        k.add_arrow(yy, z, Mono{0, 1});
        (void)w, (void)z;
        KnotComplexR rk = reduce(k);
        CHECK(rk.size() == 2);
        // surviving arrow w -> z would need U*V and is killed by UV = 0
        CHECK(rk.diff().empty());
    }
}

TEST_CASE("figure eight: tau 0, epsilon 0, genus 1, five generators, two summands") {
    KnotComplexR c = fixtures::figure_eight_complex();
    CHECK(verify(c).all_pass());
    Invariants inv = invariants(c);
    CHECK(inv.tau == 0);
    CHECK(inv.epsilon == 0);
    CHECK(inv.genus == 1);
    CHECK_FALSE(inv.lspace);
    SnakeDecomposition dec = snake_decomposition(c);
    CHECK(dec.open_chains() == 1);
    CHECK(dec.closed_chains() == 1);
}

TEST_CASE("mirror flips tau and epsilon; involution on canonical forms") {
    for (const KnotComplexR& c :
         {fixtures::trefoil_complex(), fixtures::cable21_trefoil_complex(),
          fixtures::figure_eight_complex(), fixtures::t25_complex()}) {
        Invariants inv = invariants(c);
        KnotComplexR m = mirror_complex(c);
        Invariants minv = invariants(m);
        CHECK(minv.tau == -inv.tau);
        CHECK(minv.epsilon == -inv.epsilon);
        CHECK(isomorphic(mirror_complex(m), c));
    }
    CHECK_FALSE(isomorphic(fixtures::trefoil_complex(),
                           mirror_complex(fixtures::trefoil_complex())));
}

TEST_CASE("isomorphic is relabeling-invariant") {
    KnotComplexR c = fixtures::cable21_trefoil_complex();
    KnotComplexR p;  // same complex, permuted generator insertion order
    int g = p.add_gen("gg", 0, 4);
    int f = p.add_gen("ff", 1, 3);
    int e = p.add_gen("ee", 2, 4);
    int d = p.add_gen("dd", 3, 3);
    int cc = p.add_gen("cc", 4, 2);
    int b = p.add_gen("bb", 3, 1);
    int a = p.add_gen("aa", 4, 0);
    p.add_arrow(b, a, Mono{1, 0});
    p.add_arrow(b, e, Mono{0, 2});
    p.add_arrow(cc, d, Mono{0, 1});
    p.add_arrow(e, d, Mono{1, 0});
    p.add_arrow(f, cc, Mono{2, 0});
    p.add_arrow(f, g, Mono{0, 1});
    CHECK(isomorphic(c, p));
    CHECK_FALSE(isomorphic(c, fixtures::t25_complex()));
}

TEST_CASE("mazur table: verifies, reduced, three summands, tau 2 epsilon 1") {
    KnotComplexR c = fixtures::mazur_trefoil_complex();
    CHECK(c.size() == 29);
    CHECK(c.is_reduced());
    CHECK(verify(c).all_pass());
    auto h = specialize(normalize_absolute(c), Specialization::U1V0);
    auto v = specialize(normalize_absolute(c), Specialization::U0V1);
    CHECK(h.total_rank == 1);
    CHECK(v.total_rank == 1);
    // Over UV = 0 the printed table splits further than the three-component
    // figure suggests: x3' = x3 + V x17 detaches the V^2 arrow (the incoming
    // U-arrow picks up UV x17 = 0), and symmetrically for x27. The table is
    // isomorphic to a 5-generator open chain plus six boxes.
    SnakeDecomposition dec = snake_decomposition(normalize_absolute(c));
    CHECK(dec.open_chains() == 1);
    CHECK(dec.closed_chains() == 6);
    CHECK(dec.summands[0].gens.size() == 5);
    Invariants inv = invariants(c);
    CHECK(inv.tau == 2);
    CHECK(inv.epsilon == 1);
}

TEST_CASE("snake reassembly: basis change conjugates the differential exactly") {
    for (const KnotComplexR& c :
         {fixtures::cable21_trefoil_complex(), fixtures::mazur_trefoil_complex(),
          fixtures::figure_eight_complex()}) {
        SnakeDecomposition dec = snake_decomposition(c);
        int n = c.size();
        // check D_new * T = T * D_old as matrices over R, where
        // new[i] = sum_j T[i][j] old[j] and rows act by d(new_i) = sum D_new[i][k] new_k.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Entry lhs, rhs;
                for (int k = 0; k < n; ++k) {
                    for (const Mono& m1 : dec.complex.entry(i, k))
                        for (const Mono& m2 : dec.basis[k][j]) {
                            auto pr = mono_mul(m1, m2);
                            if (pr) entry_add(lhs, *pr);
                        }
                    for (const Mono& m1 : dec.basis[i][k])
                        for (const Mono& m2 : c.entry(k, j)) {
                            auto pr = mono_mul(m1, m2);
                            if (pr) entry_add(lhs, *pr);  // char 2: add both sides together
                        }
                }
                (void)rhs;
                CHECK(lhs.empty());
            }
        // T * Tinv = identity
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Entry prod;
                for (int k = 0; k < n; ++k)
                    for (const Mono& m1 : dec.basis[i][k])
                        for (const Mono& m2 : dec.basis_inv[k][j]) {
                            auto pr = mono_mul(m1, m2);
                            if (pr) entry_add(prod, *pr);
                        }
                if (i == j) {
                    REQUIRE(prod.size() == 1);
                    CHECK(prod[0].unit());
                } else {
                    CHECK(prod.empty());
                }
            }
    }
}

TEST_CASE("json round trip") {
    KnotComplexR c = fixtures::mazur_trefoil_complex();
    KnotComplexR back = complex_from_json(complex_to_json(c));
    CHECK(isomorphic(back, c));
    CHECK(back.size() == c.size());
}

TEST_CASE("reduce preserves invariants and specializations") {
    // unreduced variant of the trefoil: add a cancelling pair
    KnotComplexR c = fixtures::trefoil_complex();
    int u = c.add_gen("u", 5, 5);
    int w = c.add_gen("w", 4, 4);
    c.add_arrow(u, w, Mono{0, 0});
    KnotComplexR r = reduce(c);
    CHECK(r.size() == 3);
    CHECK(isomorphic(r, fixtures::trefoil_complex()));
    Invariants inv = invariants(c);
    CHECK(inv.tau == 1);
    CHECK(inv.epsilon == 1);
}
