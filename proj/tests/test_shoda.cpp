#include <catch2/catch_amalgamated.hpp>
#include <wedderburn/shoda.hpp>

#include "fixtures.hpp"

using namespace wedderburn;

// brute-force condition (ii) over every g in G, for cross-checking the
// transversal-based test
static bool shoda_condition_bruteforce(const FiniteGroup& G, const Subgroup& H,
                                       const Subgroup& K) {
    if (!is_normal(K, H) || !cyclic_quotient_data(H, K).has_value()) return false;
    for (Elem g = 0; g < G.order(); ++g) {
        if (H.contains(g)) continue;
        bool all_in_k = true;
        for (Elem h : H.members) {
            Elem hg = G.conj(h, g);
            if (!H.contains(hg)) continue;
            if (!K.contains(G.mul(G.inv(h), hg))) { all_in_k = false; break; }
        }
        if (all_in_k) return false;
    }
    return true;
}

// independent irreducibility oracle: <chi,chi> = 1
static bool induced_is_irreducible(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    LinearCharacter lam = canonical_linear_character(H, K);
    CharacterValues chi = induce_character(lam, whole_group(G));
    CycloNumber ip(lam.order);
    for (Elem e = 0; e < G.order(); ++e)
        ip = cyclo_add(ip, cyclo_mul(chi.value(e), chi.value(G.inv(e))));
    ip = cyclo_scale(ip, Rat(1, long(G.order())));
    return ip.is_rational() && ip.rat_value() == 1;
}

TEST_CASE("is_shoda_pair") {
    GroupPtr g168 = fixtures::g168();
    Subgroup h = subgroup_generated(*g168, {g168->generator_by_label("x"),
                                            g168->generator_by_label("b")});
    REQUIRE(is_shoda_pair(*g168, h, trivial_subgroup(*g168)).ok);

    GroupPtr q8 = fixtures::q8();
    Subgroup hx = subgroup_generated(*q8, {q8->generator_by_label("x")});
    REQUIRE(is_shoda_pair(*q8, hx, trivial_subgroup(*q8)).ok);

    // linear-character pairs (G, K) with G/K cyclic
    GroupPtr s3 = fixtures::s3();
    Subgroup a3 = subgroup_generated(*s3, {s3->generator_by_label("r")});
    REQUIRE(is_shoda_pair(*s3, whole_group(*s3), a3).ok);

    // negative case carries a witness satisfying the violated implication
    ShodaCheck bad = is_shoda_pair(*q8, trivial_subgroup(*q8), trivial_subgroup(*q8));
    REQUIRE(!bad.ok);
    REQUIRE(bad.violating_g.has_value());
    Elem w = *bad.violating_g;
    REQUIRE(!trivial_subgroup(*q8).contains(w));
    Subgroup comm = commutator_subgroup_with(trivial_subgroup(*q8), w);
    REQUIRE(comm.order() == 1);

    // a generated-subgroup reading of (ii) would wrongly accept (<x>,1) in
    // SL(2,3); the commutator-set criterion rejects it, matching <chi,chi>=3
    GroupPtr sl = fixtures::sl23();
    Subgroup slx = subgroup_generated(*sl, {sl->generator_by_label("x")});
    REQUIRE(!is_shoda_pair(*sl, slx, trivial_subgroup(*sl)).ok);
    REQUIRE(!induced_is_irreducible(*sl, slx, trivial_subgroup(*sl)));

    // transversal-based check agrees with the all-of-G check and with the
    // <chi,chi> = 1 oracle on small fixtures
    for (GroupPtr g : {fixtures::q8(), fixtures::s3(), fixtures::d8(), fixtures::f21(),
                       fixtures::sl23()}) {
        auto subs = all_subgroups(*g);
        for (const auto& hh : subs)
            for (const auto& kk : subs) {
                if (!kk.mask.is_subset_of(hh.mask)) continue;
                if (!is_normal(kk, hh)) continue;
                if (!cyclic_quotient_data(hh, kk).has_value()) continue;
                bool got = is_shoda_pair(*g, hh, kk).ok;
                REQUIRE(got == shoda_condition_bruteforce(*g, hh, kk));
                REQUIRE(got == induced_is_irreducible(*g, hh, kk));
            }
    }
}

TEST_CASE("equivalence of Shoda pairs") {
    GroupPtr g = fixtures::g1000();
    Elem x = g->generator_by_label("x"), y = g->generator_by_label("y"),
         z = g->generator_by_label("z"), w = g->generator_by_label("w");
    Subgroup whole = whole_group(*g);
    Subgroup pw = subgroup_generated(*g, {x, y, z, w});
    Subgroup pw2 = subgroup_generated(*g, {x, y, z, g->power(w, 2)});
    Subgroup q = subgroup_generated(*g, {x, y, g->power(w, 4)});
    Subgroup ky = subgroup_generated(*g, {y});
    Subgroup kyw = subgroup_generated(*g, {y, g->power(w, 4)});

    REQUIRE(are_equivalent(*g, whole, pw2, whole, pw2));
    REQUIRE(!are_equivalent(*g, whole, pw, whole, pw2));
    REQUIRE(!are_equivalent(*g, q, ky, q, kyw));

    // criterion is an iff against PCI equality (both directions, small groups)
    for (GroupPtr gg : {fixtures::q8(), fixtures::s3(), fixtures::d8()}) {
        auto subs = all_subgroups(*gg);
        Subgroup w2 = whole_group(*gg);
        std::vector<std::pair<Subgroup, Subgroup>> pairs;
        std::vector<AlgElement> pcis;
        for (const auto& hh : subs)
            for (const auto& kk : subs) {
                if (!kk.mask.is_subset_of(hh.mask) || !is_normal(kk, hh)) continue;
                if (!cyclic_quotient_data(hh, kk).has_value()) continue;
                if (!is_shoda_pair(*gg, hh, kk).ok) continue;
                pairs.push_back({hh, kk});
                pcis.push_back(pci_for_pair(w2, hh, kk));
            }
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j)
                REQUIRE(are_equivalent(*gg, pairs[i].first, pairs[i].second, pairs[j].first,
                                       pairs[j].second) == (pcis[i] == pcis[j]));
    }
}

TEST_CASE("classification of small fixtures") {
    auto c4 = enumerate_shoda_pairs(*fixtures::c4());
    REQUIRE(c4.classes.size() == 3);
    REQUIRE(c4.complete);

    auto q8 = enumerate_shoda_pairs(*fixtures::q8(), 2000, nullptr, true);
    REQUIRE(q8.classes.size() == 5);
    REQUIRE(q8.complete);

    auto s3 = enumerate_shoda_pairs(*fixtures::s3());
    REQUIRE(s3.classes.size() == 3);
    REQUIRE(s3.complete);

    // PCIs of a complete set: central idempotents, pairwise orthogonal, sum 1
    for (auto* cls : {&c4, &q8, &s3}) {
        AlgElement sum = alg_zero(*cls->classes[0].pci.group);
        for (const auto& c : cls->classes) {
            REQUIRE(is_idempotent(c.pci));
            REQUIRE(is_central(c.pci));
            sum = alg_add(sum, c.pci);
        }
        REQUIRE(sum == alg_one(*cls->classes[0].pci.group));
        for (std::size_t i = 0; i < cls->classes.size(); ++i)
            for (std::size_t j = i + 1; j < cls->classes.size(); ++j)
                REQUIRE(are_orthogonal(cls->classes[i].pci, cls->classes[j].pci));
    }

    // a non-monomial group: classification is incomplete with a residual
    auto sl = enumerate_shoda_pairs(*fixtures::sl23());
    REQUIRE(!sl.complete);
    REQUIRE(!sl.residual.is_zero());
    REQUIRE(is_idempotent(sl.residual));
    REQUIRE(is_central(sl.residual));
}

TEST_CASE("strong Shoda pairs") {
    GroupPtr g = fixtures::g1000();
    Elem x = g->generator_by_label("x"), y = g->generator_by_label("y"),
         z = g->generator_by_label("z"), w = g->generator_by_label("w");
    Subgroup p = subgroup_generated(*g, {x, y, z});
    Subgroup kxz = subgroup_generated(*g, {x, z});
    REQUIRE(is_strong_shoda_pair(*g, p, kxz));

    Subgroup q = subgroup_generated(*g, {x, y, g->power(w, 4)});
    Subgroup ky = subgroup_generated(*g, {y});
    REQUIRE(!is_strong_shoda_pair(*g, q, ky));

    // H normal in G: strong (shortcut cross-validated by the direct check)
    GroupPtr q8 = fixtures::q8();
    Subgroup hx = subgroup_generated(*q8, {q8->generator_by_label("x")});
    REQUIRE(is_strong_shoda_pair(*q8, hx, trivial_subgroup(*q8), true));
}

TEST_CASE("strong inductive chains") {
    GroupPtr q8 = fixtures::q8();
    Subgroup hx = subgroup_generated(*q8, {q8->generator_by_label("x")});
    auto ch = find_strong_inductive_chain(*q8, hx, trivial_subgroup(*q8));
    REQUIRE(ch.has_value());
    REQUIRE(ch->levels.size() == 2); // length 1: H <= G
    REQUIRE(ch->steps[0].ci_over_hi == 2);
    REQUIRE(ch->product_k == 1);

    // order-168: (<x,b>, 1) has the chain H <= <x,y,b> <= G with C0 = H1, C1 = G
    GroupPtr g168 = fixtures::g168();
    Elem x = g168->generator_by_label("x"), y = g168->generator_by_label("y"),
         b = g168->generator_by_label("b");
    Subgroup h = subgroup_generated(*g168, {x, b});
    auto c168 = find_strong_inductive_chain(*g168, h, trivial_subgroup(*g168));
    REQUIRE(c168.has_value());
    REQUIRE(c168->levels.size() == 3);
    Subgroup h1 = subgroup_generated(*g168, {x, y, b});
    REQUIRE(c168->levels[1].members == h1.members);
    REQUIRE(c168->steps[0].Ci.members == h1.members);       // C0 = H1
    REQUIRE(c168->steps[1].Ci.order() == g168->order());    // C1 = G
    REQUIRE(c168->product_k == 1);
    REQUIRE(c168->product_ci_over_hi == 6);

    // G_1000: (Q,<y>) is generalized strong; the paper's chain certifies
    GroupPtr g = fixtures::g1000();
    Elem gx = g->generator_by_label("x"), gy = g->generator_by_label("y"),
         gz = g->generator_by_label("z"), gw = g->generator_by_label("w");
    Subgroup q = subgroup_generated(*g, {gx, gy, g->power(gw, 4)});
    Subgroup ky = subgroup_generated(*g, {gy});
    Subgroup h1p = subgroup_generated(*g, {gx, gy, gz, g->power(gw, 4)});
    InductiveChain paper = certify_chain(*g, q, ky, {q, h1p, whole_group(*g)});
    REQUIRE(paper.steps[0].Ci.members == q.members); // C0 = Q
    REQUIRE(paper.steps[0].ki == 5);
    REQUIRE(paper.steps[1].Ci.order() == g->order()); // C1 = G
    REQUIRE(paper.steps[1].ki == 1);
    REQUIRE(paper.product_ci_over_hi == 4);

    auto found = find_strong_inductive_chain(*g, q, ky);
    REQUIRE(found.has_value());
    REQUIRE(found->product_ci_over_hi == 4);

    // per-level invariants
    for (const InductiveChain* chain : {&*c168, &paper, &*found}) {
        for (std::size_t i = 0; i < chain->steps.size(); ++i) {
            const ChainLevel& st = chain->steps[i];
            REQUIRE(st.ki == long(st.Hnext.order() / st.Ci.order()));
            REQUIRE(long(st.transversal.size()) == st.ki);
            REQUIRE(is_idempotent(chain->level_pci[i]));
            REQUIRE(is_central_in(chain->level_pci[i], st.Hi));
        }
    }

    // a chain violating the conditions is rejected
    REQUIRE_THROWS(certify_chain(*g, q, ky, {q, whole_group(*g)}));
}
