#ifndef WEDDERBURN_TEST_FIXTURES_HPP
#define WEDDERBURN_TEST_FIXTURES_HPP

#include <wedderburn/grp.hpp>

namespace fixtures {

using namespace wedderburn;

// The semidirect multiplication (n1,i)(n2,j) = (n1*theta^i(n2), i+j) makes the
// top generator w satisfy w^-1 n w = theta^-1(n). Paper-style presentations
// specify psi(n) = w^-1 n w, so pass theta = psi^-1.
inline std::vector<Elem> invert_map(const std::vector<Elem>& psi) {
    std::vector<Elem> inv(psi.size());
    for (Elem i = 0; i < psi.size(); ++i) inv[psi[i]] = i;
    return inv;
}

inline GroupPtr q8() {
    static GroupPtr g = FiniteGroup::quaternion8();
    return g;
}

inline GroupPtr d8() {
    static GroupPtr g = FiniteGroup::from_permutations(
        4, {{2, 3, 4, 1}, {1, 4, 3, 2}}, 10000, {"r", "s"});
    return g;
}

inline GroupPtr s3() {
    static GroupPtr g = FiniteGroup::from_permutations(3, {{2, 1, 3}, {2, 3, 1}}, 10000, {"s", "r"});
    return g;
}

inline GroupPtr c4() {
    static GroupPtr g = FiniteGroup::cyclic(4);
    return g;
}

inline GroupPtr c6() {
    static GroupPtr g = FiniteGroup::cyclic(6);
    return g;
}

// Frobenius group of order 21: C7 x| C3 with b -> b^2.
inline GroupPtr f21() {
    static GroupPtr g = [] {
        GroupPtr n = FiniteGroup::cyclic(7, "b");
        std::vector<Elem> psi(7);
        for (Elem i = 0; i < 7; ++i) psi[i] = Elem((2 * i) % 7); // a^-1 b a = b^2
        return FiniteGroup::semidirect(n, 3, invert_map(psi), "a");
    }();
    return g;
}

// SL(2,3) = Q8 x| C3 with x -> y, y -> xy.
inline GroupPtr sl23() {
    static GroupPtr g = [] {
        GroupPtr n = q8();
        Elem x = n->generator_by_label("x"), y = n->generator_by_label("y");
        std::vector<Elem> psi = n->extend_homomorphism(*n, {y, n->mul(x, y)});
        return FiniteGroup::semidirect(n, 3, invert_map(psi), "a");
    }();
    return g;
}

// (Q8 x C7) x| C3, order 168: a^-1 x a = y, a^-1 y a = xy, a^-1 b a = b^2.
inline GroupPtr g168() {
    static GroupPtr g = [] {
        GroupPtr n = FiniteGroup::direct({q8(), FiniteGroup::cyclic(7, "b")});
        Elem x = n->generator_by_label("x"), y = n->generator_by_label("y"),
             b = n->generator_by_label("b");
        std::vector<Elem> psi =
            n->extend_homomorphism(*n, {y, n->mul(x, y), n->mul(b, b)});
        return FiniteGroup::semidirect(n, 3, invert_map(psi), "a");
    }();
    return g;
}

// G_{p^3 2^n} at p = 5, n = 3 (order 1000): heisenberg(5) x| C8 with
// theta: x -> x^2, y -> z, z -> y^3   (r = 2, t = 1, k = 1, q = 3).
inline GroupPtr g1000() {
    static GroupPtr g = [] {
        GroupPtr n = FiniteGroup::heisenberg(5);
        Elem x = n->generator_by_label("x"), y = n->generator_by_label("y"),
             z = n->generator_by_label("z");
        std::vector<Elem> psi =
            n->extend_homomorphism(*n, {n->mul(x, x), z, n->mul(n->mul(y, y), y)});
        return FiniteGroup::semidirect(n, 8, invert_map(psi), "w");
    }();
    return g;
}

} // namespace fixtures

#endif
