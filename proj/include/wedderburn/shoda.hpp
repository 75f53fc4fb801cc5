#ifndef WEDDERBURN_SHODA_HPP
#define WEDDERBURN_SHODA_HPP

#include <optional>
#include <vector>

#include "galg.hpp"

namespace wedderburn {

// Per-level data of a strong inductive chain H = H_0 <= ... <= H_n = G.
struct ChainLevel {
    Subgroup Hi;
    Subgroup Hnext;
    Subgroup Ci;                   // Cen_{H_{i+1}}(e_Q(lambda^{H_i}))
    long ki = 1;                   // [H_{i+1} : C_i]
    std::vector<Elem> transversal; // left transversal of C_i in H_{i+1}
    long ci_over_hi = 1;           // |C_i / H_i|
};

struct InductiveChain {
    LinearCharacter lambda;
    std::vector<Subgroup> levels;      // H_0, ..., H_n
    std::vector<AlgElement> level_pci; // e_Q(lambda^{H_i}) for each level
    std::vector<ChainLevel> steps;     // n entries
    long product_k = 1;                // k = k_0 * ... * k_{n-1}
    long product_ci_over_hi = 1;       // prod |C_i/H_i|
};

struct ShodaPairCert {
    Subgroup H, K;
    long quotient_order = 1;
    AlgElement pci; // e_Q(lambda^G)
    bool is_shoda = false;
    bool is_strong = false;
    bool is_generalized_strong = false;
    std::optional<InductiveChain> chain;
};

struct ShodaCheck {
    bool ok = false;
    std::optional<Elem> violating_g; // condition (ii) witness on failure
    std::string reason;
};

// Conditions: (i) K normal in H with H/K cyclic; (ii) every g outside H sees
// a commutator h^-1 (g^-1 h g) outside K for some h in H with g^-1 h g in H
// (Shoda's irreducibility criterion). The commutator set at g depends only on
// the coset gH, so (ii) is tested over a transversal of H in G.
inline ShodaCheck is_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    ShodaCheck res;
    if (!K.mask.is_subset_of(H.mask)) {
        res.reason = "K not contained in H";
        return res;
    }
    if (!is_normal(K, H)) {
        res.reason = "K not normal in H";
        return res;
    }
    if (!cyclic_quotient_data(H, K).has_value()) {
        res.reason = "H/K not cyclic";
        return res;
    }
    Subgroup whole = whole_group(G);
    for (Elem g : left_transversal(H, whole)) {
        if (H.contains(g)) continue;
        bool all_in_k = true;
        for (Elem h : H.members) {
            Elem hg = G.conj(h, g);
            if (!H.contains(hg)) continue;
            if (!K.contains(G.mul(G.inv(h), hg))) { all_in_k = false; break; }
        }
        if (all_in_k) {
            res.violating_g = g;
            res.reason = "condition (ii) fails";
            return res;
        }
    }
    res.ok = true;
    return res;
}

// Equivalence criterion: exists g with H1^g n K2 = K1^g n H2.
inline bool are_equivalent(const FiniteGroup& G, const Subgroup& H1, const Subgroup& K1,
                           const Subgroup& H2, const Subgroup& K2) {
    for (Elem g = 0; g < G.order(); ++g) {
        Bitset h1g(G.order()), k1g(G.order());
        for (Elem m : H1.members) h1g.set(G.conj(m, g));
        for (Elem m : K1.members) k1g.set(G.conj(m, g));
        if (h1g.intersect(K2.mask) == k1g.intersect(H2.mask)) return true;
    }
    return false;
}

// Strong Shoda pair: (i) H normal in Cen_G(epsilon(H,K)); (ii) the distinct
// G-conjugates of epsilon(H,K) are mutually orthogonal. Remark 2(ii): H normal
// in G is sufficient.
inline bool is_strong_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K,
                                 bool debug_checks = false) {
    Subgroup whole = whole_group(G);
    bool shortcut = is_normal(H, whole);
    if (shortcut && !debug_checks) return true;
    auto direct = [&]() {
        AlgElement eps = epsilon(H, K);
        Subgroup cen = centralizer_of_element(eps, whole);
        if (!H.mask.is_subset_of(cen.mask) || !is_normal(H, cen)) return false;
        std::vector<Elem> reps = left_transversal(cen, whole);
        std::vector<AlgElement> conj;
        conj.reserve(reps.size());
        for (Elem t : reps) conj.push_back(alg_conjugate(eps, t));
        for (std::size_t i = 0; i < conj.size(); ++i)
            for (std::size_t j = i + 1; j < conj.size(); ++j)
                if (!are_orthogonal(conj[i], conj[j])) return false;
        return true;
    };
    bool ok = direct();
    if (shortcut && !ok)
        throw std::logic_error("Remark 2(ii) shortcut contradicted by direct check");
    return shortcut || ok;
}

// Validates a proposed chain H = levels[0] <= ... <= levels[n] = G and fills
// in all per-level data. Throws if a condition fails.
inline InductiveChain certify_chain(const FiniteGroup& G, const Subgroup& H, const Subgroup& K,
                                    const std::vector<Subgroup>& levels) {
    if (levels.empty() || !(levels.front().members == H.members) ||
        levels.back().order() != G.order())
        throw std::invalid_argument("certify_chain: levels must run from H to G");
    InductiveChain ch;
    ch.lambda = canonical_linear_character(H, K);
    ch.levels = levels;
    for (const Subgroup& lvl : levels)
        ch.level_pci.push_back(pci_from_character(induce_character(ch.lambda, lvl)));
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        const Subgroup& a = levels[i];
        const Subgroup& b = levels[i + 1];
        if (!a.mask.is_subset_of(b.mask))
            throw std::invalid_argument("certify_chain: levels not ascending");
        ChainLevel st;
        st.Hi = a;
        st.Hnext = b;
        st.Ci = centralizer_of_element(ch.level_pci[i], b);
        if (!a.mask.is_subset_of(st.Ci.mask) || !is_normal(a, st.Ci))
            throw std::runtime_error("chain condition (a) fails at level " + std::to_string(i));
        st.ki = long(b.order() / st.Ci.order());
        st.transversal = left_transversal(st.Ci, b);
        st.ci_over_hi = long(st.Ci.order() / a.order());
        for (std::size_t s = 0; s < st.transversal.size(); ++s)
            for (std::size_t t = s + 1; t < st.transversal.size(); ++t)
                if (!are_orthogonal(alg_conjugate(ch.level_pci[i], st.transversal[s]),
                                    alg_conjugate(ch.level_pci[i], st.transversal[t])))
                    throw std::runtime_error("chain condition (b) fails at level " +
                                             std::to_string(i));
        ch.product_k *= st.ki;
        ch.product_ci_over_hi *= st.ci_over_hi;
        ch.steps.push_back(std::move(st));
    }
    return ch;
}

// Depth-first search for a strong inductive chain. Candidates for H_{i+1} are
// tried by increasing index [G : H_{i+1}] (ties by canonical subgroup order),
// so a greedy shortest chain is found first. Remark 2(i): a normal step needs
// no orthogonality scan (re-verified when debug_checks is set).
inline std::optional<InductiveChain> find_strong_inductive_chain(
    const FiniteGroup& G, const Subgroup& H, const Subgroup& K,
    const std::vector<Subgroup>* subgroups = nullptr, bool debug_checks = false,
    std::size_t subgroup_bound = 2000) {
    std::vector<Subgroup> subs_local;
    if (!subgroups) {
        subs_local = all_subgroups(G, subgroup_bound);
        subgroups = &subs_local;
    }
    LinearCharacter lam = canonical_linear_character(H, K);

    // candidates sorted by decreasing order = increasing index
    std::vector<const Subgroup*> by_dec;
    for (const Subgroup& s : *subgroups) by_dec.push_back(&s);
    std::sort(by_dec.begin(), by_dec.end(), [](const Subgroup* a, const Subgroup* b) {
        if (a->order() != b->order()) return a->order() > b->order();
        return a->members < b->members;
    });

    std::vector<Subgroup> path{H};
    std::vector<AlgElement> pcis{pci_from_character(induce_character(lam, H))};

    std::function<bool()> dfs = [&]() -> bool {
        const Subgroup& cur = path.back();
        if (cur.order() == G.order()) return true;
        for (const Subgroup* cand : by_dec) {
            if (cand->order() <= cur.order()) break; // strictly ascending only
            if (!cur.mask.is_subset_of(cand->mask)) continue;
            const AlgElement& ei = pcis.back();
            Subgroup cen = centralizer_of_element(ei, *cand);
            if (!cur.mask.is_subset_of(cen.mask) || !is_normal(cur, cen)) continue;
            bool normal_step = is_normal(cur, *cand);
            bool orth_ok = true;
            if (!normal_step || debug_checks) {
                std::vector<Elem> reps = left_transversal(cen, *cand);
                std::vector<AlgElement> conj;
                conj.reserve(reps.size());
                for (Elem t : reps) conj.push_back(alg_conjugate(ei, t));
                for (std::size_t i = 0; i < conj.size() && orth_ok; ++i)
                    for (std::size_t j = i + 1; j < conj.size() && orth_ok; ++j)
                        if (!are_orthogonal(conj[i], conj[j])) orth_ok = false;
                if (normal_step && !orth_ok)
                    throw std::logic_error("Remark 2(i) shortcut contradicted by direct check");
            }
            if (!orth_ok) continue;
            AlgElement enext;
            try {
                enext = pci_from_character(induce_character(lam, *cand));
            } catch (const std::runtime_error&) {
                continue; // induced character not irreducible at this level
            }
            path.push_back(*cand);
            pcis.push_back(std::move(enext));
            if (dfs()) return true;
            path.pop_back();
            pcis.pop_back();
        }
        return false;
    };

    if (!dfs()) return std::nullopt;
    return certify_chain(G, H, K, path);
}

struct ShodaClassification {
    std::vector<ShodaPairCert> classes;
    bool complete = false;
    AlgElement residual; // 1 - sum of PCIs
};

// Complete, irredundant classification of Shoda pairs. Pairs are scanned by
// decreasing |H| (ties canonical), conjugate candidates are skipped, and
// equivalence classes keep the first representative found.
inline ShodaClassification enumerate_shoda_pairs(
    const FiniteGroup& G, std::size_t subgroup_bound = 2000,
    const std::vector<std::pair<Subgroup, Subgroup>>* explicit_pairs = nullptr,
    bool debug_checks = false) {
    ShodaClassification out;
    Subgroup whole = whole_group(G);

    std::vector<std::pair<Subgroup, Subgroup>> cands;
    if (explicit_pairs) {
        cands = *explicit_pairs;
    } else {
        std::vector<Subgroup> subs = all_subgroups(G, subgroup_bound);
        std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
            if (a.order() != b.order()) return a.order() > b.order();
            return a.members < b.members;
        });
        for (const Subgroup& h : subs) {
            // chi(1) = [G:H] and sum of squares of degrees is |G|
            if (h.order() * h.order() * G.order() < G.order() * G.order()) continue;
            for (const Subgroup& k : subs) {
                if (k.order() > h.order()) continue;
                if (!k.mask.is_subset_of(h.mask)) continue;
                if (!is_normal(k, h)) continue;
                if (!cyclic_quotient_data(h, k).has_value()) continue;
                cands.push_back({h, k});
            }
        }
    }

    // skip pairs conjugate to an already-processed candidate
    std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> processed;
    auto mark_conjugates = [&](const Subgroup& h, const Subgroup& k) {
        for (Elem g = 0; g < G.order(); ++g) {
            Subgroup hc = conjugate_subgroup(h, g), kc = conjugate_subgroup(k, g);
            processed.insert({hc.members, kc.members});
        }
    };

    for (const auto& [h, k] : cands) {
        if (processed.count({h.members, k.members})) continue;
        mark_conjugates(h, k);
        ShodaCheck chk = is_shoda_pair(G, h, k);
        if (!chk.ok) continue;
        bool redundant = false;
        for (const ShodaPairCert& kept : out.classes)
            if (are_equivalent(G, h, k, kept.H, kept.K)) {
                if (debug_checks) {
                    AlgElement e = pci_for_pair(whole, h, k);
                    if (!(e == kept.pci))
                        throw std::logic_error("equivalence criterion disagrees with PCI equality");
                }
                redundant = true;
                break;
            }
        if (redundant) continue;
        ShodaPairCert cert;
        cert.H = h;
        cert.K = k;
        cert.quotient_order = long(h.order() / k.order());
        cert.pci = pci_for_pair(whole, h, k);
        cert.is_shoda = true;
        cert.is_strong = is_strong_shoda_pair(G, h, k, debug_checks);
        if (debug_checks) {
            for (const ShodaPairCert& kept : out.classes)
                if (cert.pci == kept.pci)
                    throw std::logic_error("distinct classes share a PCI");
        }
        out.classes.push_back(std::move(cert));
    }

    AlgElement sum = alg_zero(G);
    for (const ShodaPairCert& c : out.classes) sum = alg_add(sum, c.pci);
    out.residual = alg_sub(alg_one(G), sum);
    out.complete = out.residual.is_zero();
    return out;
}

} // namespace wedderburn

#endif
