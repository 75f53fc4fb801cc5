#ifndef WEDDERBURN_GALG_HPP
#define WEDDERBURN_GALG_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cyclo.hpp"
#include "grp.hpp"

namespace wedderburn {

// Sparse exact element of QG: element index -> nonzero rational.
struct AlgElement {
    const FiniteGroup* group = nullptr;
    std::map<Elem, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    Rat coeff(Elem g) const {
        auto it = terms.find(g);
        return it == terms.end() ? Rat(0) : it->second;
    }
    bool operator==(const AlgElement& o) const {
        return group == o.group && terms == o.terms;
    }
};

inline AlgElement alg_zero(const FiniteGroup& G) { return AlgElement{&G, {}}; }

inline AlgElement alg_term(const FiniteGroup& G, Elem g, const Rat& c = Rat(1)) {
    AlgElement a{&G, {}};
    if (c != 0) a.terms[g] = c;
    return a;
}

inline AlgElement alg_one(const FiniteGroup& G) { return alg_term(G, 0); }

inline void alg_insert(AlgElement& a, Elem g, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = a.terms.emplace(g, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) a.terms.erase(it);
    }
}

inline AlgElement alg_add(const AlgElement& a, const AlgElement& b) {
    AlgElement r = a;
    for (const auto& [g, c] : b.terms) alg_insert(r, g, c);
    return r;
}

inline AlgElement alg_sub(const AlgElement& a, const AlgElement& b) {
    AlgElement r = a;
    for (const auto& [g, c] : b.terms) alg_insert(r, g, -c);
    return r;
}

inline AlgElement alg_scale(const AlgElement& a, const Rat& c) {
    AlgElement r{a.group, {}};
    if (c == 0) return r;
    for (const auto& [g, v] : a.terms) r.terms[g] = v * c;
    return r;
}

// Convolution product, accumulated densely.
inline AlgElement alg_mul(const AlgElement& a, const AlgElement& b) {
    const FiniteGroup& G = *a.group;
    if (a.group != b.group) throw std::invalid_argument("alg_mul: different parent groups");
    std::vector<Rat> buf(G.order(), Rat(0));
    std::vector<Elem> touched;
    for (const auto& [g, cg] : a.terms) {
        const Elem* row = nullptr; // indexled via G.mul
        for (const auto& [h, ch] : b.terms) {
            Elem k = G.mul(g, h);
            if (buf[k] == 0) touched.push_back(k);
            buf[k] += cg * ch;
        }
        (void)row;
    }
    AlgElement r{&G, {}};
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (Elem k : touched)
        if (buf[k] != 0) r.terms.emplace_hint(r.terms.end(), k, buf[k]);
    return r;
}

// Left/right multiplication by a single group element.
inline AlgElement alg_gmul(const FiniteGroup& G, Elem g, const AlgElement& a) {
    AlgElement r{&G, {}};
    for (const auto& [h, c] : a.terms) r.terms[G.mul(g, h)] = c;
    return r;
}

inline AlgElement alg_mulg(const AlgElement& a, Elem g) {
    const FiniteGroup& G = *a.group;
    AlgElement r{&G, {}};
    for (const auto& [h, c] : a.terms) r.terms[G.mul(h, g)] = c;
    return r;
}

// alpha^g = g^-1 alpha g
inline AlgElement alg_conjugate(const AlgElement& a, Elem g) {
    const FiniteGroup& G = *a.group;
    AlgElement r{&G, {}};
    for (const auto& [h, c] : a.terms) r.terms[G.conj(h, g)] = c;
    return r;
}

inline bool is_idempotent(const AlgElement& a) { return alg_mul(a, a) == a; }

inline bool is_central_in(const AlgElement& a, const Subgroup& S) {
    const FiniteGroup& G = *a.group;
    for (Elem g : S.gens)
        if (!(alg_gmul(G, g, a) == alg_mulg(a, g))) return false;
    return true;
}

inline bool is_central(const AlgElement& a) {
    const FiniteGroup& G = *a.group;
    for (Elem g : G.generators())
        if (!(alg_gmul(G, g, a) == alg_mulg(a, g))) return false;
    return true;
}

inline bool are_orthogonal(const AlgElement& a, const AlgElement& b) {
    return alg_mul(a, b).is_zero() && alg_mul(b, a).is_zero();
}

// hat(H) = (1/|H|) sum of H
inline AlgElement hat(const Subgroup& H) {
    AlgElement r{H.parent, {}};
    Rat c(1, long(H.order()));
    for (Elem h : H.members) r.terms[h] = c;
    return r;
}

// {g in within : alpha^g = alpha}
inline Subgroup centralizer_of_element(const AlgElement& a, const Subgroup& within) {
    const FiniteGroup& G = *a.group;
    std::vector<Elem> m;
    for (Elem g : within.members) {
        bool ok = true;
        for (const auto& [h, c] : a.terms)
            if (a.coeff(G.conj(h, g)) != c) { ok = false; break; }
        if (ok) m.push_back(g);
    }
    return make_subgroup(G, std::move(m));
}

// Normal closure of <seeds> in H.
inline Subgroup normal_closure_in(const Subgroup& H, std::vector<Elem> seeds) {
    const FiniteGroup& G = *H.parent;
    Subgroup L = subgroup_generated(G, seeds);
    for (;;) {
        bool grew = false;
        for (Elem g : H.gens)
            for (Elem s : L.gens)
                if (!L.contains(G.conj(s, g))) {
                    seeds.push_back(G.conj(s, g));
                    grew = true;
                }
        if (!grew) return L;
        L = subgroup_generated(G, seeds);
        seeds = L.gens;
    }
}

// Subgroups of H containing K properly, normal in H, minimal by inclusion.
// Every minimal normal-over-K subgroup is the normal closure of K<h> for any
// of its elements h outside K, so closures over all h exhaust the candidates.
inline std::vector<Subgroup> minimal_normal_over(const Subgroup& H, const Subgroup& K) {
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup> cands;
    for (Elem h : H.members) {
        if (K.contains(h)) continue;
        std::vector<Elem> seeds = K.gens;
        seeds.push_back(h);
        Subgroup L = normal_closure_in(H, seeds);
        if (seen.insert(L.members).second) cands.push_back(L);
    }
    std::vector<Subgroup> minimal;
    for (const Subgroup& L : cands) {
        bool min = true;
        for (const Subgroup& M : cands)
            if (M.order() < L.order() && M.mask.is_subset_of(L.mask)) { min = false; break; }
        if (min) minimal.push_back(L);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
    return minimal;
}

// epsilon(H,K) = hat(K) if H=K, else prod over minimal normal L > K of (hat(K)-hat(L)).
// When H/K is cyclic the minimal L are K<h0^{m/p}> for primes p | m.
inline AlgElement epsilon(const Subgroup& H, const Subgroup& K, bool general_definition = false) {
    const FiniteGroup& G = *H.parent;
    if (!is_normal(K, H)) throw std::invalid_argument("epsilon: K not normal in H");
    if (H.members == K.members) return hat(K);
    AlgElement kh = hat(K);
    AlgElement acc = alg_one(G);
    bool first = true;
    std::optional<std::pair<Elem, long>> cyc;
    if (!general_definition) cyc = cyclic_quotient_data(H, K);
    if (!general_definition && cyc.has_value()) {
        long m = cyc->second;
        for (auto [p, e] : factorize(m)) {
            std::vector<Elem> seeds = K.gens;
            seeds.push_back(G.power(cyc->first, m / p));
            Subgroup L = subgroup_generated(G, seeds);
            AlgElement f = alg_sub(kh, hat(L));
            acc = first ? f : alg_mul(acc, f);
            first = false;
        }
    } else {
        for (const Subgroup& L : minimal_normal_over(H, K)) {
            AlgElement f = alg_sub(kh, hat(L));
            acc = first ? f : alg_mul(acc, f);
            first = false;
        }
    }
    return acc;
}

// e(G,H,K): sum of the distinct G-conjugates of epsilon(H,K).
inline AlgElement e_sum_conjugates(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    AlgElement eps = epsilon(H, K);
    Subgroup whole = whole_group(G);
    Subgroup cen = centralizer_of_element(eps, whole);
    AlgElement sum = alg_zero(G);
    for (Elem t : left_transversal(cen, whole)) sum = alg_add(sum, alg_conjugate(eps, t));
    return sum;
}

// Linear character on H with kernel K; lambda(h) = zeta_m^{value_exponent[h]}.
struct LinearCharacter {
    Subgroup domain;
    Subgroup kernel;
    long order = 1;
    std::map<Elem, long> value_exponent;

    long exponent_of(Elem h) const {
        auto it = value_exponent.find(h);
        if (it == value_exponent.end())
            throw std::invalid_argument("linear character: element outside domain");
        return it->second;
    }
};

// The canonical character: sends the canonical generator of H/K to zeta_m.
inline LinearCharacter canonical_linear_character(const Subgroup& H, const Subgroup& K) {
    const FiniteGroup& G = *H.parent;
    auto cyc = cyclic_quotient_data(H, K);
    if (!cyc.has_value())
        throw std::invalid_argument("canonical_linear_character: H/K not cyclic");
    LinearCharacter lam;
    lam.domain = H;
    lam.kernel = K;
    lam.order = cyc->second;
    Elem pow = 0;
    for (long t = 0; t < lam.order; ++t) {
        for (Elem k : K.members) lam.value_exponent[G.mul(pow, k)] = t;
        pow = G.mul(pow, cyc->first);
    }
    if (long(lam.value_exponent.size()) != long(H.order()))
        throw std::logic_error("canonical_linear_character: coset labelling incomplete");
    return lam;
}

// Induced character values on an ambient subgroup.
struct CharacterValues {
    LinearCharacter lambda;
    Subgroup ambient;
    long degree = 1;
    std::map<Elem, CycloNumber> values;

    const CycloNumber& value(Elem g) const {
        auto it = values.find(g);
        if (it == values.end())
            throw std::invalid_argument("character value: element outside ambient subgroup");
        return it->second;
    }
};

// lambda^A(g) = sum over left-transversal reps t with t^-1 g t in H of
// lambda(t^-1 g t); the reps t run over the cosets tH covering A.
inline CharacterValues induce_character(const LinearCharacter& lam, const Subgroup& ambient) {
    const FiniteGroup& G = *lam.domain.parent;
    if (!lam.domain.mask.is_subset_of(ambient.mask))
        throw std::invalid_argument("induce_character: domain not inside ambient");
    CharacterValues chi;
    chi.lambda = lam;
    chi.ambient = ambient;
    chi.degree = long(ambient.order() / lam.domain.order());
    std::vector<Elem> reps = left_transversal(lam.domain, ambient);
    long m = lam.order;
    for (Elem g : ambient.members) {
        std::vector<Rat> counts(m, Rat(0));
        bool any = false;
        for (Elem t : reps) {
            Elem c = G.mul(G.mul(G.inv(t), g), t);
            if (lam.domain.contains(c)) {
                counts[lam.exponent_of(c)] += 1;
                any = true;
            }
        }
        CycloNumber v(m);
        if (any) {
            Poly p(m, Rat(0));
            for (long t = 0; t < m; ++t) p[t] = counts[t];
            v = cyclo_from_poly(m, std::move(p));
        }
        chi.values.emplace(g, std::move(v));
    }
    return chi;
}

// Q(chi) as a subfield of Q(zeta_m).
inline FixedFieldSpec character_field(const CharacterValues& chi) {
    long m = chi.lambda.order;
    std::vector<long> fix;
    for (long k : units_mod(m)) {
        bool fixes_all = true;
        for (const auto& [g, v] : chi.values)
            if (!cyclo_eq(galois_apply(k == 0 ? 1 : k, v), v)) { fixes_all = false; break; }
        if (fixes_all) fix.push_back(k);
    }
    FixedFieldSpec F;
    F.n = m;
    F.fixing = fix;
    return F;
}

// e_Q(chi) = (chi(1)/|A|) (1/[Q(zeta_m):Q(chi)]) sum_g Tr_{Q(zeta_m)/Q}(chi(g)) g^-1.
// Summing over the whole cyclotomic Galois group and dividing by the subfield
// index avoids choosing coset representatives of Gal(Q(chi)/Q).
inline AlgElement pci_from_character(const CharacterValues& chi) {
    const FiniteGroup& G = *chi.ambient.parent;
    long m = chi.lambda.order;
    FixedFieldSpec qchi = character_field(chi);
    long subfield_index = long(qchi.fixing.size());
    AlgElement e = alg_zero(G);
    std::vector<long> gal = units_mod(m);
    for (const auto& [g, v] : chi.values) {
        if (v.is_zero()) continue;
        CycloNumber tr(m);
        for (long k : gal) tr = cyclo_add(tr, galois_apply(m == 1 ? 1 : k, v));
        if (!tr.is_rational())
            throw std::logic_error("pci_from_character: trace not rational");
        Rat coeff = Rat(chi.degree, long(chi.ambient.order())) * tr.rat_value() /
                    Rat(subfield_index);
        alg_insert(e, G.inv(g), coeff);
    }
    if (!is_idempotent(e) || !is_central_in(e, chi.ambient))
        throw std::runtime_error("character not irreducible or values inconsistent");
    return e;
}

// Convenience: the PCI of the pair (H,K) in the ambient subgroup.
inline AlgElement pci_for_pair(const Subgroup& ambient, const Subgroup& H, const Subgroup& K) {
    return pci_from_character(induce_character(canonical_linear_character(H, K), ambient));
}

inline std::string alg_to_string(const AlgElement& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : a.terms) {
        if (!first) os << " + ";
        os << rat_to_string(c) << "*[" << a.group->element_labels()[g] << "]";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace wedderburn

#endif
