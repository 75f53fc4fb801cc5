#ifndef WEDDERBURN_CYCLO_HPP
#define WEDDERBURN_CYCLO_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace wedderburn {

// ---------- polynomial helpers (little-endian coefficient vectors) ----------

using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// a mod b and a / b (exact field arithmetic over Q).
inline void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
    quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
        if (a.size() >= b.size() && a.size() && a.back() == 0) poly_trim(a);
    }
    poly_trim(quot);
    rem = std::move(a);
}

// Cyclotomic polynomial cache. Phi_n computed by dividing x^n - 1 by the
// product of Phi_d over proper divisors d of n.
inline const Poly& cyclotomic_poly(long n) {
    static std::map<long, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::function<Poly(long)> phi = [&](long m) -> Poly {
        auto cit = cache.find(m);
        if (cit != cache.end()) return cit->second;
        Poly num(m + 1, Rat(0));
        num[0] = -1;
        num[m] = 1;
        Poly den{1};
        for (long d = 1; d < m; ++d)
            if (m % d == 0) den = poly_mul(den, phi(d));
        Poly q, r;
        poly_divmod(num, den, q, r);
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        cache[m] = q;
        return q;
    };
    phi(n);
    return cache.at(n);
}

// Precomputed rows zeta_n^e mod Phi_n for 0 <= e < 2n, so reductions in the
// hot paths are coefficient folds instead of polynomial divisions.
inline const std::vector<std::vector<Rat>>& zeta_power_rows(long n) {
    static std::map<long, std::vector<std::vector<Rat>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const Poly& phi = cyclotomic_poly(n);
    std::size_t deg = phi.size() - 1;
    std::vector<std::vector<Rat>> rows;
    rows.reserve(2 * n);
    std::vector<Rat> cur(deg, Rat(0));
    cur[0] = 1;
    for (long e = 0; e < 2 * n; ++e) {
        rows.push_back(cur);
        // multiply by zeta: shift and fold the top coefficient
        Rat top = deg > 0 ? cur[deg - 1] : Rat(0);
        for (std::size_t i = deg; i-- > 1;) cur[i] = cur[i - 1];
        if (deg > 0) cur[0] = Rat(0);
        if (top != 0)
            for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * phi[i];
    }
    cache[n] = std::move(rows);
    return cache.at(n);
}

// ---------- exact elements of Q(zeta_n) ----------

// Element of Q[x]/Phi_n(x) in the power basis; carries its conductor.
struct CycloNumber {
    long n = 1;               // conductor
    std::vector<Rat> c;       // length phi(n)

    CycloNumber() : n(1), c(1, Rat(0)) {}
    explicit CycloNumber(long conductor) : n(conductor), c(euler_phi(conductor), Rat(0)) {}

    bool is_zero() const {
        for (const Rat& x : c)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return false;
        return true;
    }
    Rat rat_value() const {
        if (!is_rational()) throw std::invalid_argument("cyclo value is not rational");
        return c[0];
    }
};

inline CycloNumber cyclo_from_poly(long n, Poly p) {
    CycloNumber out(n);
    std::size_t deg = out.c.size();
    if (p.size() > std::size_t(2 * n)) {
        const Poly& phi = cyclotomic_poly(n);
        Poly q, r;
        poly_divmod(std::move(p), phi, q, r);
        for (std::size_t i = 0; i < r.size(); ++i) out.c[i] = r[i];
        return out;
    }
    const auto& rows = zeta_power_rows(n);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (i < deg) {
            out.c[i] += p[i];
        } else {
            const auto& row = rows[i];
            for (std::size_t j = 0; j < deg; ++j)
                if (row[j] != 0) out.c[j] += p[i] * row[j];
        }
    }
    return out;
}

inline CycloNumber cyclo_rational(const Rat& r, long n = 1) {
    CycloNumber out(n);
    out.c[0] = r;
    return out;
}

// zeta_n^k
inline CycloNumber cyclo_zeta(long n, long k = 1) {
    Poly p(mod_pos(k, n) + 1, Rat(0));
    p[mod_pos(k, n)] = 1;
    return cyclo_from_poly(n, std::move(p));
}

// Conductor change n -> N with n | N (zeta_n = zeta_N^{N/n}).
inline CycloNumber cyclo_lift(const CycloNumber& a, long N) {
    if (a.n == N) return a;
    if (N % a.n != 0) throw std::invalid_argument("cyclo_lift: target conductor not a multiple");
    long s = N / a.n;
    Poly p(std::size_t((long(a.c.size()) - 1) * s + 1), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) p[i * s] = a.c[i];
    poly_trim(p);
    return cyclo_from_poly(N, std::move(p));
}

inline long common_conductor(const CycloNumber& a, const CycloNumber& b) {
    return std::lcm(a.n, b.n);
}

inline CycloNumber cyclo_add(const CycloNumber& a, const CycloNumber& b) {
    long N = common_conductor(a, b);
    CycloNumber x = cyclo_lift(a, N), y = cyclo_lift(b, N);
    for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
    return x;
}

inline CycloNumber cyclo_neg(const CycloNumber& a) {
    CycloNumber x = a;
    for (Rat& v : x.c) v = -v;
    return x;
}

inline CycloNumber cyclo_sub(const CycloNumber& a, const CycloNumber& b) {
    return cyclo_add(a, cyclo_neg(b));
}

inline CycloNumber cyclo_mul(const CycloNumber& a, const CycloNumber& b) {
    long N = common_conductor(a, b);
    CycloNumber x = cyclo_lift(a, N), y = cyclo_lift(b, N);
    Poly p = poly_mul(Poly(x.c.begin(), x.c.end()), Poly(y.c.begin(), y.c.end()));
    return cyclo_from_poly(N, std::move(p));
}

inline CycloNumber cyclo_scale(const CycloNumber& a, const Rat& r) {
    CycloNumber x = a;
    for (Rat& v : x.c) v *= r;
    return x;
}

inline bool cyclo_eq(const CycloNumber& a, const CycloNumber& b) {
    long N = common_conductor(a, b);
    return cyclo_lift(a, N).c == cyclo_lift(b, N).c;
}

// Inverse via extended Euclid against Phi_n.
inline CycloNumber cyclo_inverse(const CycloNumber& a) {
    if (a.is_zero()) throw std::invalid_argument("inverse of 0");
    if (a.is_rational()) return cyclo_rational(Rat(1) / a.c[0], a.n);
    Poly r0 = cyclotomic_poly(a.n), r1(a.c.begin(), a.c.end());
    poly_trim(r1);
    Poly s0{}, s1{Rat(1)};
    while (!r1.empty()) {
        Poly q, rem;
        poly_divmod(r0, r1, q, rem);
        Poly s2 = s0;
        Poly qs = poly_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since Phi_n is irreducible), a*s0 = r0 mod Phi_n
    if (r0.size() != 1) throw std::logic_error("cyclo_inverse: gcd not constant");
    Rat inv_c = Rat(1) / r0[0];
    for (Rat& v : s0) v *= inv_c;
    return cyclo_from_poly(a.n, std::move(s0));
}

// ---------- Galois actions and fixed fields ----------

// zeta_n -> zeta_n^k with gcd(k,n) = 1.
struct GaloisElement {
    long n = 1;
    long k = 1;
};

inline CycloNumber galois_apply(long k, const CycloNumber& a) {
    if (a.n == 1) return a;
    if (std::gcd(mod_pos(k, a.n), a.n) != 1)
        throw std::invalid_argument("galois_apply: exponent not coprime to conductor");
    Poly p(std::size_t(a.n), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != 0) p[mod_pos(long(i) * k, a.n)] += a.c[i];
    poly_trim(p);
    return cyclo_from_poly(a.n, std::move(p));
}

inline CycloNumber galois_apply(const GaloisElement& g, const CycloNumber& a) {
    CycloNumber x = cyclo_lift(a, std::lcm(g.n, a.n));
    long k = g.k;
    if (x.n != g.n) {
        // extend the action: choose exponent congruent to k mod g.n, 1 mod (x.n/gcd)
        long M = x.n;
        long kk = -1;
        for (long cand = 1; cand < M; ++cand)
            if (std::gcd(cand, M) == 1 && mod_pos(cand, g.n) == mod_pos(k, g.n)) { kk = cand; break; }
        if (kk < 0) throw std::invalid_argument("galois_apply: cannot extend action");
        k = kk;
    }
    return galois_apply(k, x);
}

// Subfield of Q(zeta_n) given by its fixing subgroup inside (Z/n)^x.
struct FixedFieldSpec {
    long n = 1;
    std::vector<long> fixing; // sorted, closed under multiplication mod n, contains 1

    long degree() const { return euler_phi(n) / long(fixing.size()); }
    bool fixes(long k) const {
        return std::binary_search(fixing.begin(), fixing.end(), mod_pos(k, n));
    }
    bool operator==(const FixedFieldSpec& o) const { return n == o.n && fixing == o.fixing; }
};

inline std::vector<long> closure_mod(long n, std::vector<long> gens) {
    std::set<long> s{1 % n};
    std::vector<long> work(s.begin(), s.end());
    for (long g : gens)
        if (s.insert(mod_pos(g, n)).second) work.push_back(mod_pos(g, n));
    for (std::size_t i = 0; i < work.size(); ++i)
        for (long g : std::vector<long>(s.begin(), s.end())) {
            long v = mul_mod(work[i], g, n);
            if (s.insert(v).second) work.push_back(v);
        }
    return std::vector<long>(s.begin(), s.end());
}

inline FixedFieldSpec fixed_field(long n, const std::vector<long>& gen_exponents) {
    for (long k : gen_exponents)
        if (n > 1 && std::gcd(mod_pos(k, n), n) != 1)
            throw std::invalid_argument("fixed_field: generator exponent not coprime");
    FixedFieldSpec F;
    F.n = n;
    F.fixing = closure_mod(n, gen_exponents);
    return F;
}

inline FixedFieldSpec full_field(long n) { return fixed_field(n, {}); }

inline bool is_fixed(const CycloNumber& a, const FixedFieldSpec& F) {
    CycloNumber x = cyclo_lift(a, F.n);
    for (long k : F.fixing)
        if (!(galois_apply(k, x).c == x.c)) return false;
    return true;
}

// F contained in E (same ambient conductor): E's fixing subgroup inside F's.
inline bool subfield_of(const FixedFieldSpec& F, const FixedFieldSpec& E) {
    if (F.n != E.n) throw std::invalid_argument("subfield_of: conductor mismatch");
    return std::includes(F.fixing.begin(), F.fixing.end(), E.fixing.begin(), E.fixing.end());
}

// Coset representatives of E.fixing inside F.fixing (deterministic: minimal rep).
inline std::vector<long> relative_coset_reps(const FixedFieldSpec& E, const FixedFieldSpec& F) {
    if (!subfield_of(F, E)) throw std::invalid_argument("relative_coset_reps: F not inside E");
    std::set<long> covered;
    std::vector<long> reps;
    for (long k : F.fixing) {
        if (covered.count(k)) continue;
        reps.push_back(k);
        for (long e : E.fixing) covered.insert(mul_mod(k, e, F.n));
    }
    return reps;
}

// N_{E/F}(a) for F subset E subset Q(zeta_n); a must lie in E.
inline CycloNumber relative_norm(const CycloNumber& a, const FixedFieldSpec& E_fix,
                                 const FixedFieldSpec& F_fix) {
    CycloNumber x = cyclo_lift(a, E_fix.n);
    if (!is_fixed(x, E_fix)) throw std::invalid_argument("relative_norm: element not in E");
    CycloNumber prod = cyclo_rational(Rat(1), E_fix.n);
    for (long k : relative_coset_reps(E_fix, F_fix))
        prod = cyclo_mul(prod, galois_apply(k, x));
    return prod;
}

// ---------- norm witness search ----------

// Candidate coordinate values ordered by (denominator, |numerator|, sign).
inline std::vector<Rat> witness_value_order(long height, long den_bound) {
    std::vector<Rat> v;
    for (long q = 1; q <= den_bound; ++q)
        for (long p = 1; p <= height; ++p) {
            if (std::gcd(p, q) != 1) continue;
            v.push_back(Rat(p, q));
            v.push_back(Rat(-p, q));
        }
    return v;
}

struct WitnessSearchResult {
    std::optional<CycloNumber> witness;
    bool budget_exhausted = false;
    std::uint64_t candidates_tried = 0;
};

// Searches x in E = Q(zeta_n) with N_{E/F}(x) = target. Candidates have
// power-basis numerators in [-height, height] and denominators dividing
// den_bound; enumeration is graded by support size, then positions, then the
// canonical value order, so small-support witnesses are found first. Absence
// is not a proof of non-norm (the box, and optionally the budget, is finite).
inline WitnessSearchResult norm_witness_search(const CycloNumber& target,
                                               const FixedFieldSpec& E_fix,
                                               const FixedFieldSpec& F_fix, long height,
                                               long den_bound = 2,
                                               std::uint64_t max_candidates = 2000000) {
    WitnessSearchResult res;
    if (E_fix.fixing.size() != 1 && E_fix.n > 2)
        throw std::invalid_argument("norm_witness_search: E must be the full cyclotomic field");
    CycloNumber tgt = cyclo_lift(target, E_fix.n);
    if (tgt.is_zero()) throw std::invalid_argument("norm_witness_search: target must be nonzero");
    std::size_t dim = tgt.c.size();
    std::vector<Rat> vals = witness_value_order(height, den_bound);
    std::vector<long> reps = relative_coset_reps(E_fix, F_fix);

    auto norm_of = [&](const CycloNumber& x) {
        CycloNumber prod = cyclo_rational(Rat(1), E_fix.n);
        for (long k : reps) prod = cyclo_mul(prod, galois_apply(k, x));
        return prod;
    };

    std::vector<std::size_t> pos;
    std::function<bool(std::size_t, std::size_t)> positions = [&](std::size_t start,
                                                                  std::size_t remaining) -> bool {
        if (remaining == 0) {
            // enumerate value tuples over the chosen support
            std::vector<std::size_t> vi(pos.size(), 0);
            while (true) {
                if (res.candidates_tried >= max_candidates) {
                    res.budget_exhausted = true;
                    return true;
                }
                ++res.candidates_tried;
                CycloNumber cand(E_fix.n);
                for (std::size_t i = 0; i < pos.size(); ++i) cand.c[pos[i]] = vals[vi[i]];
                if (cyclo_eq(norm_of(cand), tgt)) {
                    res.witness = cand;
                    return true;
                }
                std::size_t j = pos.size();
                while (j > 0) {
                    --j;
                    if (++vi[j] < vals.size()) break;
                    vi[j] = 0;
                    if (j == 0) return false;
                }
                if (pos.size() == 0) return false;
            }
        }
        for (std::size_t p = start; p + remaining <= dim; ++p) {
            pos.push_back(p);
            bool done = positions(p + 1, remaining - 1);
            pos.pop_back();
            if (done) return true;
        }
        return false;
    };

    for (std::size_t support = 1; support <= dim; ++support) {
        pos.clear();
        if (positions(0, support)) break;
        if (res.budget_exhausted) break;
    }
    return res;
}

// ---------- Hilbert symbols and quadratic splitting ----------

inline long p_valuation(const Rat& a, long p, Rat& unit_out) {
    Int num = rat_num(a), den = rat_den(a);
    long v = 0;
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    unit_out = Rat(num, den);
    return v;
}

inline long rat_mod(const Rat& u, long m) {
    // u with denominator coprime to m, reduced mod m
    Int num = rat_num(u), den = rat_den(u);
    long nm = mod_pos((num % m).convert_to<long>(), m);
    long dm = mod_pos((den % m).convert_to<long>(), m);
    return mul_mod(nm, inv_mod(dm, m), m);
}

inline int legendre_symbol(long a, long p) {
    a = mod_pos(a, p);
    if (a == 0) return 0;
    long r = pow_mod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

// Hilbert symbol (a,b)_v over Q_v; place = 0 means the real place.
inline int hilbert_symbol_rational(const Rat& a, const Rat& b, long place) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol needs nonzero arguments");
    if (place == 0) return (a < 0 && b < 0) ? -1 : 1;
    long p = place;
    Rat u, v;
    long alpha = p_valuation(a, p, u), beta = p_valuation(b, p, v);
    if (p == 2) {
        auto eps = [&](const Rat& x) { return (rat_mod(x, 8) % 4 == 3) ? 1 : 0; };
        auto omega = [&](const Rat& x) {
            long m = rat_mod(x, 8);
            return (m == 3 || m == 5) ? 1 : 0;
        };
        long e = eps(u) * eps(v) + (alpha % 2 + 2) % 2 * omega(v) + (beta % 2 + 2) % 2 * omega(u);
        return e % 2 ? -1 : 1;
    }
    long e = ((alpha % 2 + 2) % 2) * ((beta % 2 + 2) % 2) * ((p - 1) / 2);
    int s = e % 2 ? -1 : 1;
    if ((beta % 2 + 2) % 2) s *= legendre_symbol(rat_mod(u, p), p);
    if ((alpha % 2 + 2) % 2) s *= legendre_symbol(rat_mod(v, p), p);
    return s;
}

// Places where the quaternion algebra (a,b) over Q ramifies (finite primes and
// possibly 0 for the real place), sorted with 0 first.
inline std::vector<long> quaternion_ramified_places(const Rat& a, const Rat& b) {
    std::set<long> cand{2};
    auto add_primes = [&](const Rat& x) {
        for (auto [p, e] : factorize(std::labs(rat_num(x).convert_to<long>())))
            cand.insert(p);
        for (auto [p, e] : factorize(std::labs(rat_den(x).convert_to<long>())))
            cand.insert(p);
    };
    add_primes(a);
    add_primes(b);
    std::vector<long> ram;
    if (hilbert_symbol_rational(a, b, 0) == -1) ram.push_back(0);
    for (long p : cand)
        if (hilbert_symbol_rational(a, b, p) == -1) ram.push_back(p);
    return ram;
}

enum class Splitting { split, inert, ramified };

inline long fundamental_discriminant(long d) {
    d = squarefree_part(d);
    if (mod_pos(d, 4) == 1) return d;
    return 4 * d;
}

// Kronecker symbol (a/n), n >= 0.
inline int kronecker_symbol(long a, long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int s = sign;
    while (n % 2 == 0) {
        n /= 2;
        long am = mod_pos(a, 8);
        if (am == 0 || am % 2 == 0) return 0;
        if (am == 3 || am == 5) s = -s;
    }
    // now n odd; Jacobi symbol
    a = mod_pos(a, n);
    long num = a, den = n;
    while (num != 0) {
        while (num % 2 == 0) {
            num /= 2;
            long dm = den % 8;
            if (dm == 3 || dm == 5) s = -s;
        }
        std::swap(num, den);
        if (num % 4 == 3 && den % 4 == 3) s = -s;
        num %= den;
    }
    if (den != 1) return 0;
    return s;
}

// Behaviour of a place of Q in Q(sqrt(d)); place = 0 is the real place.
inline Splitting quadratic_splitting(long d, long place) {
    d = squarefree_part(d);
    if (d == 1) return Splitting::split;
    if (place == 0) return d > 0 ? Splitting::split : Splitting::inert;
    long D = fundamental_discriminant(d);
    if (mod_pos(D, place) == 0) return Splitting::ramified;
    int chi = kronecker_symbol(D, place);
    return chi == 1 ? Splitting::split : Splitting::inert;
}

// ---------- quadratic subfield detection (cosmetic + rule R4 data) ----------

// All squarefree d != 1 with Q(sqrt(d)) inside the field fixed by F.fixing.
inline std::vector<long> quadratic_subfields_of(const FixedFieldSpec& F) {
    std::vector<long> out;
    std::vector<long> divisors;
    for (long m = 1; m <= F.n; ++m)
        if (F.n % m == 0) divisors.push_back(m);
    std::set<long> seen;
    for (long m : divisors) {
        for (long sgn : {1L, -1L}) {
            long d = squarefree_part(sgn * m);
            if (d == 1 || seen.count(d)) continue;
            long D = fundamental_discriminant(d);
            if (F.n % std::labs(D) != 0) continue; // conductor of chi_D must divide n
            seen.insert(d);
            bool inside = true;
            for (long k : F.fixing)
                if (kronecker_symbol(D, k) != 1) { inside = false; break; }
            if (inside) out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end(), [](long a, long b) {
        if (std::labs(a) != std::labs(b)) return std::labs(a) < std::labs(b);
        return a < b;
    });
    return out;
}

// If F has degree 2, returns the squarefree d with F = Q(sqrt(d)).
inline std::optional<long> quadratic_field_discriminant(const FixedFieldSpec& F) {
    if (F.degree() != 2) return std::nullopt;
    for (long d : quadratic_subfields_of(F)) {
        long D = fundamental_discriminant(d);
        // require exact match: kernel of chi_D inside (Z/n)^x equals F.fixing
        std::vector<long> kernel;
        for (long k : units_mod(F.n))
            if (kronecker_symbol(D, k) == 1) kernel.push_back(k);
        if (kernel == F.fixing) return d;
    }
    return std::nullopt;
}

// ---------- exact signs of real cyclotomic values ----------

struct QInterval {
    Rat lo, hi;
    QInterval() : lo(0), hi(0) {}
    QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static QInterval point(const Rat& r) { return {r, r}; }
    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }
    QInterval scale(const Rat& r) const {
        if (r >= 0) return {lo * r, hi * r};
        return {hi * r, lo * r};
    }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    Rat abs_max() const { return std::max(boost::multiprecision::abs(lo), boost::multiprecision::abs(hi)); }
};

// arctan(1/x) by alternating series; the true value lies between consecutive
// partial sums.
inline QInterval arctan_inv_interval(long x, int terms) {
    Rat s(0), prev(0);
    Rat xp(1, x);
    Rat x2(1, x * x);
    for (int k = 0; k < terms; ++k) {
        prev = s;
        Rat t = xp / (2 * k + 1);
        s += (k % 2 == 0) ? t : -t;
        xp *= x2;
    }
    return {std::min(s, prev), std::max(s, prev)};
}

inline QInterval pi_interval(int terms) {
    QInterval a = arctan_inv_interval(5, terms), b = arctan_inv_interval(239, terms);
    return a.scale(16) - b.scale(4);
}

// cos on an interval argument with |theta| <= 7, via Taylor + tail bound.
inline QInterval cos_interval(const QInterval& theta, int terms) {
    QInterval t2 = theta * theta;
    QInterval sum = QInterval::point(Rat(1));
    QInterval pw = QInterval::point(Rat(1));
    Rat fact(1);
    for (int k = 1; k <= terms; ++k) {
        pw = pw * t2;
        fact *= Rat(2 * k - 1) * Rat(2 * k);
        QInterval term = pw.scale(Rat(1) / fact);
        sum = (k % 2 == 1) ? sum - term : sum + term;
    }
    // tail bound: |theta|^(2(terms+1)) / (2(terms+1))! * 2 (ratio < 1/2 once
    // (2k+1)(2k+2) > 2*theta^2, true for terms >= 5 when |theta| <= 7)
    Rat tm = theta.abs_max();
    Rat tail_num(1);
    Rat tail_fact(1);
    for (int k = 1; k <= terms + 1; ++k) {
        tail_num *= tm * tm;
        tail_fact *= Rat(2 * k - 1) * Rat(2 * k);
    }
    Rat tail = 2 * tail_num / tail_fact;
    return {sum.lo - tail, sum.hi + tail};
}

// Exact sign of the image of a under zeta_n -> exp(2*pi*i*k/n), which must be
// a real embedding for the value at hand (imaginary parts are not computed;
// the caller guarantees reality, e.g. a lies in a real fixed field).
inline int real_embedding_sign(const CycloNumber& a, long k) {
    if (a.is_zero()) return 0;
    for (int prec = 16; prec <= 4096; prec *= 2) {
        QInterval pi2 = pi_interval(prec).scale(2);
        QInterval val = QInterval::point(Rat(0));
        for (std::size_t j = 0; j < a.c.size(); ++j) {
            if (a.c[j] == 0) continue;
            long r = mod_pos(k * long(j), a.n);
            // angle in (-pi, pi] for better convergence
            Rat frac = Rat(r, a.n);
            if (frac > Rat(1, 2)) frac -= 1;
            QInterval theta = pi2.scale(frac);
            val = val + cos_interval(theta, std::max(8, prec / 4)).scale(a.c[j]);
        }
        if (!val.contains_zero()) return val.lo > 0 ? 1 : -1;
    }
    throw std::runtime_error("real_embedding_sign: precision exhausted (is the value real and nonzero?)");
}

// Signs of a at all real embeddings of F (one per coset of F.fixing); requires
// F real, i.e. -1 in F.fixing.
inline std::vector<int> signs_at_real_embeddings(const CycloNumber& a0, const FixedFieldSpec& F) {
    if (!F.fixes(F.n - 1)) throw std::invalid_argument("signs_at_real_embeddings: field is not real");
    CycloNumber a = cyclo_lift(a0, F.n);
    if (!is_fixed(a, F)) throw std::invalid_argument("signs_at_real_embeddings: value not in F");
    std::set<long> covered;
    std::vector<int> signs;
    for (long k : units_mod(F.n)) {
        if (covered.count(k)) continue;
        for (long f : F.fixing) covered.insert(mul_mod(k, f, F.n));
        signs.push_back(real_embedding_sign(a, k));
    }
    return signs;
}

inline std::string cyclo_to_string(const CycloNumber& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_to_string(a.c[i]);
        if (i > 0) os << "*z" << a.n << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace wedderburn

#endif
