#ifndef WEDDERBURN_RATIONAL_HPP
#define WEDDERBURN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedderburn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_to_string(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(n, d);
}

// Sign as -1/0/+1.
inline int rat_sign(const Rat& r) { return r.sign(); }

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline long mod_pos(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline long mul_mod(long a, long b, long n) { return mod_pos((a % n) * (b % n), n); }

inline long pow_mod(long a, long e, long n) {
    long r = 1 % n;
    a = mod_pos(a, n);
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, n);
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    return r;
}

// Inverse of a mod n; requires gcd(a,n)=1.
inline long inv_mod(long a, long n) {
    long t = 0, nt = 1, r = n, nr = mod_pos(a, n);
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return mod_pos(t, n);
}

inline std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline long euler_phi(long n) {
    long phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline long squarefree_part(long n) {
    long sign = n < 0 ? -1 : 1;
    n = std::abs(n);
    long r = 1;
    for (auto [p, e] : factorize(n))
        if (e % 2) r *= p;
    return sign * r;
}

// Units of Z/nZ, sorted. For n=1 this is {0} (the zero ring's unit).
inline std::vector<long> units_mod(long n) {
    if (n == 1) return {0};
    std::vector<long> u;
    for (long k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) u.push_back(k);
    return u;
}

// Multiplicative order of k mod n; requires gcd(k,n)=1.
inline long order_mod(long k, long n) {
    if (n == 1) return 1;
    long o = 1, v = mod_pos(k, n);
    while (v != 1) { v = mul_mod(v, k, n); ++o; }
    return o;
}

// Deterministic xorshift generator for property tests and sampling.
struct DetRng {
    std::uint64_t s;
    explicit DetRng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }
};

// FNV-1a over a byte string; used for stable digests in reports.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) { h ^= c; h *= 1099511628211ull; }
    return h;
}

} // namespace wedderburn

#endif
