#include <catch2/catch_amalgamated.hpp>
#include <wedderburn/grp.hpp>

#include "fixtures.hpp"

using namespace wedderburn;

TEST_CASE("permutation closure builds S3, Q8 and the trivial group") {
    GroupPtr s3 = fixtures::s3();
    REQUIRE(s3->order() == 6);

    GroupPtr q8 = fixtures::q8();
    REQUIRE(q8->order() == 8);
    Elem x = q8->generator_by_label("x"), y = q8->generator_by_label("y");
    REQUIRE(q8->element_order(x) == 4);
    REQUIRE(q8->mul(x, x) == q8->mul(y, y));            // x^2 = y^2
    REQUIRE(q8->conj(x, y) == q8->inv(x));              // y^-1 x y = x^-1

    GroupPtr triv = FiniteGroup::from_permutations(1, {});
    REQUIRE(triv->order() == 1);

    REQUIRE_THROWS_WITH(FiniteGroup::from_permutations(3, {{2, 1, 3}, {2, 3, 1}}, 5),
                        "order bound exceeded");
}

TEST_CASE("group laws hold on samples") {
    for (GroupPtr g : {fixtures::q8(), fixtures::s3(), fixtures::f21()}) {
        for (Elem a = 0; a < g->order(); ++a) {
            REQUIRE(g->mul(0, a) == a);
            REQUIRE(g->mul(a, 0) == a);
            REQUIRE(g->mul(a, g->inv(a)) == 0);
            for (Elem b = 0; b < g->order(); ++b)
                for (Elem c = 0; c < g->order(); ++c)
                    REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
        }
    }
    // large group: random sampling
    GroupPtr g = fixtures::g1000();
    DetRng rng(42);
    for (int i = 0; i < 100000; ++i) {
        Elem a = Elem(rng.next_below(g->order())), b = Elem(rng.next_below(g->order())),
             c = Elem(rng.next_below(g->order()));
        REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
    }
}

TEST_CASE("semidirect products") {
    GroupPtr f21 = fixtures::f21();
    REQUIRE(f21->order() == 21);
    // nonabelian with trivial center
    Subgroup center = centralizer_set(*f21, [&] {
        std::vector<Elem> all;
        for (Elem e = 0; e < f21->order(); ++e) all.push_back(e);
        return all;
    }());
    REQUIRE(center.order() == 1);

    GroupPtr g168 = fixtures::g168();
    REQUIRE(g168->order() == 168);
    // presentation relations from the order-168 construction
    Elem x = g168->generator_by_label("x"), y = g168->generator_by_label("y"),
         b = g168->generator_by_label("b"), a = g168->generator_by_label("a");
    REQUIRE(g168->conj(x, a) == y);
    REQUIRE(g168->conj(y, a) == g168->mul(x, y));
    REQUIRE(g168->conj(b, a) == g168->mul(b, b));
    REQUIRE(g168->element_order(a) == 3);

    // C2 x| C3 with trivial action is the direct product (same table after relabel)
    GroupPtr c2 = FiniteGroup::cyclic(2, "s");
    std::vector<Elem> id_map{0, 1};
    GroupPtr semi = FiniteGroup::semidirect(c2, 3, id_map, "t");
    GroupPtr dir = FiniteGroup::direct({c2, FiniteGroup::cyclic(3, "t")});
    REQUIRE(semi->order() == 6);
    // relabel: semidirect uses j*|N|+n, direct uses n + |C2|*j -- same here
    for (Elem u = 0; u < 6; ++u)
        for (Elem v = 0; v < 6; ++v) REQUIRE(semi->mul(u, v) == dir->mul(u, v));
    // abelian
    for (Elem u = 0; u < 6; ++u)
        for (Elem v = 0; v < 6; ++v) REQUIRE(semi->mul(u, v) == semi->mul(v, u));

    // non-automorphism rejected with a violating pair in the message
    std::vector<Elem> bad{0, 0};
    REQUIRE_THROWS(FiniteGroup::semidirect(c2, 3, bad));
    // theta^m != id rejected
    GroupPtr c7 = FiniteGroup::cyclic(7, "b");
    std::vector<Elem> dbl(7);
    for (Elem i = 0; i < 7; ++i) dbl[i] = Elem((2 * i) % 7);
    REQUIRE_THROWS(FiniteGroup::semidirect(c7, 2, dbl)); // order of doubling is 3, not 2
}

TEST_CASE("heisenberg groups") {
    GroupPtr h3 = FiniteGroup::heisenberg(3);
    REQUIRE(h3->order() == 27);
    std::vector<Elem> all;
    for (Elem e = 0; e < h3->order(); ++e) all.push_back(e);
    REQUIRE(centralizer_set(*h3, all).order() == 3);
    for (Elem e = 1; e < h3->order(); ++e) REQUIRE(h3->element_order(e) == 3);

    GroupPtr h5 = FiniteGroup::heisenberg(5);
    REQUIRE(h5->order() == 125);
    // commutator subgroup is <x> (order 5)
    std::vector<Elem> comms;
    for (Elem u = 0; u < h5->order(); ++u)
        for (Elem v : h5->generators())
            comms.push_back(h5->mul(h5->mul(h5->inv(v), h5->inv(u)), h5->mul(v, u)));
    Subgroup derived = subgroup_generated(*h5, comms);
    Subgroup xsub = subgroup_generated(*h5, {h5->generator_by_label("x")});
    REQUIRE(derived.members == xsub.members);
    REQUIRE(derived.order() == 5);

    REQUIRE_THROWS(FiniteGroup::heisenberg(2));
    REQUIRE_THROWS(FiniteGroup::heisenberg(9));
}

TEST_CASE("subgroup generation and Lagrange") {
    GroupPtr g168 = fixtures::g168();
    Subgroup triv = subgroup_generated(*g168, {});
    REQUIRE(triv.order() == 1);
    Subgroup h = subgroup_generated(
        *g168, {g168->generator_by_label("x"), g168->generator_by_label("b")});
    REQUIRE(h.order() == 28);

    GroupPtr g1000 = fixtures::g1000();
    Elem w = g1000->generator_by_label("w");
    Subgroup q = subgroup_generated(*g1000, {g1000->generator_by_label("x"),
                                             g1000->generator_by_label("y"),
                                             g1000->power(w, 4)});
    REQUIRE(q.order() == 50);

    for (const Subgroup& s : all_subgroups(*fixtures::s3()))
        REQUIRE(fixtures::s3()->order() % s.order() == 0);
}

TEST_CASE("normalizer, centralizer, conjugation") {
    GroupPtr g = fixtures::g1000();
    Elem x = g->generator_by_label("x"), y = g->generator_by_label("y"),
         z = g->generator_by_label("z"), w = g->generator_by_label("w");
    // normalizer of <x, z y> is <P, w^2>
    Subgroup k = subgroup_generated(*g, {x, g->mul(z, y)});
    REQUIRE(k.order() == 25);
    Subgroup nk = normalizer(*g, k);
    Subgroup pw2 = subgroup_generated(*g, {x, y, z, g->mul(w, w)});
    REQUIRE(pw2.order() == 500);
    REQUIRE(nk.members == pw2.members);

    Subgroup whole = whole_group(*g);
    REQUIRE(normalizer(*g, whole).order() == g->order());
    REQUIRE(centralizer_set(*g, {0}).order() == g->order());

    Subgroup p = subgroup_generated(*g, {x, y, z});
    REQUIRE(is_normal(p, whole));
    Subgroup q = subgroup_generated(*g, {x, y, g->power(w, 4)});
    REQUIRE(!is_normal(q, whole));
    Subgroup qc = conjugate_subgroup(q, z);
    REQUIRE(qc.order() == q.order());
    REQUIRE(!(qc.members == q.members));
}

TEST_CASE("commutator subgroups [H,g]") {
    GroupPtr q8 = fixtures::q8();
    Elem x = q8->generator_by_label("x"), y = q8->generator_by_label("y");
    Subgroup h = subgroup_generated(*q8, {x});
    // central g gives trivial commutator
    Subgroup c0 = commutator_subgroup_with(h, q8->mul(x, x));
    REQUIRE(c0.order() == 1);
    Subgroup c1 = commutator_subgroup_with(h, y);
    REQUIRE(c1.order() == 2);
    REQUIRE(c1.contains(q8->mul(x, x)));

    GroupPtr g = fixtures::g1000();
    Subgroup p = subgroup_generated(*g, {g->generator_by_label("x"), g->generator_by_label("y"),
                                         g->generator_by_label("z")});
    Subgroup cw = commutator_subgroup_with(p, g->generator_by_label("w"));
    REQUIRE(cw.contains(g->generator_by_label("x")));
}

TEST_CASE("cyclic quotient data") {
    GroupPtr g168 = fixtures::g168();
    Subgroup h = subgroup_generated(
        *g168, {g168->generator_by_label("x"), g168->generator_by_label("b")});
    Subgroup triv = trivial_subgroup(*g168);

    auto same = cyclic_quotient_data(h, h);
    REQUIRE(same.has_value());
    REQUIRE(same->first == 0);
    REQUIRE(same->second == 1);

    auto hk = cyclic_quotient_data(h, triv);
    REQUIRE(hk.has_value());
    REQUIRE(hk->second == 28);
    REQUIRE(g168->element_order(hk->first) == 28);

    GroupPtr q8 = fixtures::q8();
    auto none = cyclic_quotient_data(whole_group(*q8), trivial_subgroup(*q8));
    REQUIRE(!none.has_value());

    // generator coset has exact quotient order: check on S3 pairs
    GroupPtr s3 = fixtures::s3();
    for (const Subgroup& hh : all_subgroups(*s3))
        for (const Subgroup& kk : all_subgroups(*s3)) {
            if (!hh.contains_subgroup(kk) || !is_normal(kk, hh)) continue;
            auto r = cyclic_quotient_data(hh, kk);
            if (!r.has_value()) continue;
            long o = 1;
            Elem v = r->first;
            while (!kk.contains(v)) { v = s3->mul(v, r->first); ++o; }
            REQUIRE(o == r->second);
        }
}

TEST_CASE("all_subgroups") {
    GroupPtr c5 = FiniteGroup::cyclic(5);
    REQUIRE(all_subgroups(*c5).size() == 2);
    REQUIRE(all_subgroups(*fixtures::q8()).size() == 6);
    REQUIRE(all_subgroups(*fixtures::s3()).size() == 6);
    REQUIRE_THROWS(all_subgroups(*fixtures::s3(), 4));

    // closed under conjugation
    for (GroupPtr g : {fixtures::q8(), fixtures::s3(), fixtures::d8()}) {
        auto subs = all_subgroups(*g);
        std::set<std::vector<Elem>> have;
        for (auto& s : subs) have.insert(s.members);
        for (auto& s : subs)
            for (Elem e = 0; e < g->order(); ++e)
                REQUIRE(have.count(conjugate_subgroup(s, e).members) == 1);
    }
}

TEST_CASE("left transversals") {
    GroupPtr g = fixtures::g1000();
    Elem z = g->generator_by_label("z");
    Subgroup q = subgroup_generated(*g, {g->generator_by_label("x"), g->generator_by_label("y"),
                                         g->power(g->generator_by_label("w"), 4)});
    Subgroup h1 = subgroup_generated(*g, {g->generator_by_label("x"), g->generator_by_label("y"),
                                          z, g->power(g->generator_by_label("w"), 4)});
    REQUIRE(h1.order() == 250);
    std::vector<Elem> reps = left_transversal(q, h1);
    REQUIRE(reps.size() == 5);
    std::set<Elem> zp;
    for (long i = 0; i < 5; ++i) zp.insert(g->power(z, i));
    REQUIRE(std::set<Elem>(reps.begin(), reps.end()) == zp);
    REQUIRE(reps[0] == 0);

    REQUIRE(left_transversal(h1, h1) == std::vector<Elem>{0});

    // distinct cosets, count = index
    GroupPtr s3 = fixtures::s3();
    for (const Subgroup& s : all_subgroups(*s3)) {
        auto t = left_transversal(s, whole_group(*s3));
        REQUIRE(t.size() == s3->order() / s.order());
        std::set<std::vector<Elem>> cosets;
        for (Elem rep : t) {
            std::vector<Elem> cs;
            for (Elem m : s.members) cs.push_back(s3->mul(rep, m));
            std::sort(cs.begin(), cs.end());
            cosets.insert(cs);
        }
        REQUIRE(cosets.size() == t.size());
    }
}
