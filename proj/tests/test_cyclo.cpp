#include <catch2/catch_amalgamated.hpp>
#include <wedderburn/cyclo.hpp>

using namespace wedderburn;

static CycloNumber rnd_cyclo(long n, DetRng& rng) {
    CycloNumber a(n);
    for (Rat& c : a.c) c = Rat(long(rng.next_below(7)) - 3, 1 + long(rng.next_below(2)));
    return a;
}

TEST_CASE("field arithmetic in Q(zeta_n)") {
    // zeta_4^2 = -1
    REQUIRE(cyclo_eq(cyclo_mul(cyclo_zeta(4), cyclo_zeta(4)), cyclo_rational(-1)));
    // 1 + zeta_5 + ... + zeta_5^4 = 0
    CycloNumber s = cyclo_rational(1);
    for (long k = 1; k < 5; ++k) s = cyclo_add(s, cyclo_zeta(5, k));
    REQUIRE(s.is_zero());
    // (1+zeta_4)(1-zeta_4) = 2
    CycloNumber i4 = cyclo_zeta(4);
    REQUIRE(cyclo_eq(cyclo_mul(cyclo_add(cyclo_rational(1), i4),
                               cyclo_sub(cyclo_rational(1), i4)),
                     cyclo_rational(2)));

    REQUIRE_THROWS(cyclo_inverse(CycloNumber(12)));

    DetRng rng(7);
    for (int t = 0; t < 200; ++t) {
        long n = std::vector<long>{4, 5, 7, 8, 12, 28}[t % 6];
        CycloNumber a = rnd_cyclo(n, rng);
        if (a.is_zero()) continue;
        REQUIRE(cyclo_eq(cyclo_mul(a, cyclo_inverse(a)), cyclo_rational(1)));
    }
}

TEST_CASE("galois action is a ring automorphism") {
    CycloNumber z7 = cyclo_zeta(7);
    REQUIRE(cyclo_eq(galois_apply(2, z7), cyclo_zeta(7, 2)));
    CycloNumber v = cyclo_add(cyclo_zeta(5, 1), cyclo_zeta(5, 4));
    REQUIRE(cyclo_eq(galois_apply(2, v), cyclo_add(cyclo_zeta(5, 2), cyclo_zeta(5, 3))));

    DetRng rng(11);
    for (int t = 0; t < 200; ++t) {
        long n = std::vector<long>{5, 8, 12, 28}[t % 4];
        long k = units_mod(n)[rng.next_below(units_mod(n).size())];
        CycloNumber a = rnd_cyclo(n, rng), b = rnd_cyclo(n, rng);
        REQUIRE(cyclo_eq(galois_apply(k, a), galois_apply(k + n, a)));
        REQUIRE(cyclo_eq(galois_apply(k, cyclo_add(a, b)),
                         cyclo_add(galois_apply(k, a), galois_apply(k, b))));
        REQUIRE(cyclo_eq(galois_apply(k, cyclo_mul(a, b)),
                         cyclo_mul(galois_apply(k, a), galois_apply(k, b))));
    }
    REQUIRE_THROWS(galois_apply(2, cyclo_zeta(4)));
}

TEST_CASE("fixed fields") {
    FixedFieldSpec full = fixed_field(12, {});
    REQUIRE(full.degree() == 4);

    // n = 28, sigma: zeta_7 -> zeta_7^2, i -> -i  is exponent 23 mod 28
    FixedFieldSpec f = fixed_field(28, {23});
    REQUIRE(f.degree() == 2);

    CycloNumber eta = cyclo_add(cyclo_add(cyclo_zeta(7, 1), cyclo_zeta(7, 2)), cyclo_zeta(7, 4));
    REQUIRE(is_fixed(eta, fixed_field(7, {2})));
    REQUIRE(!is_fixed(cyclo_zeta(7), fixed_field(7, {2})));
}

TEST_CASE("relative norms") {
    // N_{Q(zeta_7,i)/Q(sqrt(-7))}(1+i) = 8
    FixedFieldSpec e = full_field(28);
    FixedFieldSpec f = fixed_field(28, {23});
    CycloNumber one_plus_i = cyclo_add(cyclo_rational(1), cyclo_zeta(28, 7));
    REQUIRE(cyclo_eq(relative_norm(one_plus_i, e, f), cyclo_rational(8)));

    // N_{E/E} = identity
    REQUIRE(cyclo_eq(relative_norm(one_plus_i, e, e), one_plus_i));

    // N_{Q(i)/Q}(1+i) = 2
    CycloNumber u = cyclo_add(cyclo_rational(1), cyclo_zeta(4));
    REQUIRE(cyclo_eq(relative_norm(u, full_field(4), fixed_field(4, {3})), cyclo_rational(2)));

    // multiplicative, lands in F, tower consistency
    DetRng rng(13);
    FixedFieldSpec e12 = full_field(12);
    FixedFieldSpec mid = fixed_field(12, {5});
    FixedFieldSpec base = fixed_field(12, {5, 7});
    for (int t = 0; t < 200; ++t) {
        CycloNumber a = rnd_cyclo(12, rng), b = rnd_cyclo(12, rng);
        CycloNumber na = relative_norm(a, e12, base);
        REQUIRE(is_fixed(na, base));
        REQUIRE(cyclo_eq(relative_norm(cyclo_mul(a, b), e12, base),
                         cyclo_mul(na, relative_norm(b, e12, base))));
        REQUIRE(cyclo_eq(na, relative_norm(relative_norm(a, e12, mid), mid, base)));
    }
}

TEST_CASE("norm witness search") {
    FixedFieldSpec e5 = full_field(5), q5 = fixed_field(5, {2});
    auto triv = norm_witness_search(cyclo_rational(1), e5, q5, 1);
    REQUIRE(triv.witness.has_value());
    REQUIRE(cyclo_eq(*triv.witness, cyclo_rational(1)));

    // target 25 in Q(zeta_5) over Q has a height-1 witness
    auto w25 = norm_witness_search(cyclo_rational(25), e5, q5, 1);
    REQUIRE(w25.witness.has_value());
    REQUIRE(cyclo_eq(relative_norm(*w25.witness, e5, q5), cyclo_rational(25)));

    // target 8 = N(1+i) from Q(zeta_28) down to Q(sqrt(-7)): small support
    FixedFieldSpec e28 = full_field(28), f28 = fixed_field(28, {23});
    auto w8 = norm_witness_search(cyclo_rational(8), e28, f28, 1);
    REQUIRE(w8.witness.has_value());
    REQUIRE(cyclo_eq(relative_norm(*w8.witness, e28, f28), cyclo_rational(8)));

    // absence within a budget is reported as exhausted, not found
    auto none = norm_witness_search(cyclo_rational(-1), e5, q5, 1, 2, 50);
    REQUIRE(!none.witness.has_value());
}

TEST_CASE("hilbert symbols") {
    REQUIRE(hilbert_symbol_rational(-1, -1, 0) == -1);
    REQUIRE(hilbert_symbol_rational(-1, -1, 2) == -1);

    // cross-check (-1,-1)_2: x^2 + y^2 + z^2 = 0 has no primitive solution mod 8
    bool isotropic = false;
    for (int x = 0; x < 8 && !isotropic; ++x)
        for (int y = 0; y < 8 && !isotropic; ++y)
            for (int z = 0; z < 8 && !isotropic; ++z)
                if ((x % 2 || y % 2 || z % 2) && (x * x + y * y + z * z) % 8 == 0)
                    isotropic = true;
    REQUIRE(!isotropic);

    // product formula over all places for random pairs
    DetRng rng(17);
    int tested = 0;
    for (int t = 0; tested < 100; ++t) {
        Rat a(long(rng.next_below(40)) - 20, 1 + long(rng.next_below(4)));
        Rat b(long(rng.next_below(40)) - 20, 1 + long(rng.next_below(4)));
        if (a == 0 || b == 0) continue;
        ++tested;
        int prod = hilbert_symbol_rational(a, b, 0);
        std::set<long> primes{2};
        for (auto [p, e] : factorize(std::labs(rat_num(a).convert_to<long>()))) primes.insert(p);
        for (auto [p, e] : factorize(std::labs(rat_den(a).convert_to<long>()))) primes.insert(p);
        for (auto [p, e] : factorize(std::labs(rat_num(b).convert_to<long>()))) primes.insert(p);
        for (auto [p, e] : factorize(std::labs(rat_den(b).convert_to<long>()))) primes.insert(p);
        for (long p : primes) prod *= hilbert_symbol_rational(a, b, p);
        REQUIRE(prod == 1);
    }
}

TEST_CASE("quadratic splitting and discriminant detection") {
    REQUIRE(quadratic_splitting(-7, 2) == Splitting::split);
    // oracle: t^2 = -7 mod 2^4 solvable
    bool sol = false;
    for (int t = 0; t < 16; ++t)
        if ((t * t + 7) % 16 == 0) sol = true;
    REQUIRE(sol);

    REQUIRE(quadratic_splitting(-1, 2) == Splitting::ramified);
    REQUIRE(quadratic_splitting(5, 2) == Splitting::inert);
    REQUIRE(quadratic_splitting(5, 11) == Splitting::split); // 4^2 = 16 = 5 mod 11
    REQUIRE(quadratic_splitting(-7, 0) == Splitting::inert);
    REQUIRE(quadratic_splitting(5, 0) == Splitting::split);

    // the degree-2 fixed field of <23> in Q(zeta_28) is Q(sqrt(-7))
    auto d = quadratic_field_discriminant(fixed_field(28, {23}));
    REQUIRE(d.has_value());
    REQUIRE(*d == -7);
    auto di = quadratic_field_discriminant(full_field(4));
    REQUIRE(di.has_value());
    REQUIRE(*di == -1);
    auto d5 = quadratic_field_discriminant(fixed_field(5, {4}));
    REQUIRE(d5.has_value());
    REQUIRE(*d5 == 5);
}

TEST_CASE("exact signs at real embeddings") {
    // 2*cos(2*pi/5) = zeta_5 + zeta_5^4 > 0
    CycloNumber c1 = cyclo_add(cyclo_zeta(5), cyclo_zeta(5, 4));
    REQUIRE(real_embedding_sign(c1, 1) == 1);
    // its conjugate 2*cos(4*pi/5) < 0
    REQUIRE(real_embedding_sign(c1, 2) == -1);
    // zeta_3 + zeta_3^2 = -1
    CycloNumber c2 = cyclo_add(cyclo_zeta(3), cyclo_zeta(3, 2));
    REQUIRE(real_embedding_sign(c2, 1) == -1);

    // -25 in Q: negative at the unique real embedding
    auto signs = signs_at_real_embeddings(cyclo_rational(-25), fixed_field(5, {2, 3, 4}));
    REQUIRE(signs == std::vector<int>{-1});
    // sqrt(5)-like element: opposite signs at the two embeddings of Q(sqrt 5)
    CycloNumber r5 = cyclo_sub(cyclo_add(cyclo_zeta(5, 1), cyclo_zeta(5, 4)),
                               cyclo_add(cyclo_zeta(5, 2), cyclo_zeta(5, 3)));
    auto s2 = signs_at_real_embeddings(r5, fixed_field(5, {4}));
    REQUIRE(s2.size() == 2);
    REQUIRE(s2[0] * s2[1] == -1);
}
