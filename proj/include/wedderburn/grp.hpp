#ifndef WEDDERBURN_GRP_HPP
#define WEDDERBURN_GRP_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace wedderburn {

using Elem = std::uint32_t;

// Fixed-capacity bitset over group elements.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i >> 6] |= (1ull << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return n_; }
    bool operator==(const Bitset& o) const { return w_ == o.w_; }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    Bitset intersect(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// A finite group as a closed multiplication structure on indices 0..order-1.
// Index 0 is the identity. Immutable after construction.
class FiniteGroup {
public:
    std::size_t order() const { return n_; }
    Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    Elem conj(Elem a, Elem g) const { return mul(mul(inv(g), a), g); } // g^-1 a g
    Elem power(Elem a, long e) const {
        if (e < 0) { a = inv(a); e = -e; }
        Elem r = 0;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    long element_order(Elem a) const {
        long o = 1;
        Elem v = a;
        while (v != 0) { v = mul(v, a); ++o; }
        return o;
    }

    const std::vector<Elem>& generators() const { return gens_; }
    const std::vector<std::string>& generator_labels() const { return gen_labels_; }
    const std::vector<std::string>& element_labels() const { return elem_labels_; }

    Elem generator_by_label(const std::string& s) const {
        for (std::size_t i = 0; i < gen_labels_.size(); ++i)
            if (gen_labels_[i] == s) return gens_[i];
        throw std::invalid_argument("unknown generator label: " + s);
    }

    // Evaluates a word like "x*y^2*b^-1" (also accepts juxtaposed '*'-free single label).
    Elem eval_word(const std::string& word) const {
        Elem acc = 0;
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < word.size() && word[i] == ' ') ++i; };
        skip_ws();
        if (i == word.size() || word == "1" || word == "e") return 0;
        while (i < word.size()) {
            std::size_t j = i;
            while (j < word.size() && word[j] != '*' && word[j] != '^' && word[j] != ' ') ++j;
            std::string lab = word.substr(i, j - i);
            Elem g = generator_by_label(lab);
            i = j;
            skip_ws();
            long e = 1;
            if (i < word.size() && word[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < word.size() && word[k] == '-') ++k;
                while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k]))) ++k;
                e = std::stol(word.substr(i, k - i));
                i = k;
            }
            acc = mul(acc, power(g, e));
            skip_ws();
            if (i < word.size() && word[i] == '*') { ++i; skip_ws(); }
        }
        return acc;
    }

    // Conjugacy classes, sorted by minimal member; class ids follow that order.
    const std::vector<std::vector<Elem>>& conjugacy_classes() const { return classes_; }
    std::size_t class_of(Elem a) const { return class_id_[a]; }

    // BFS expression tree: element = bfs_parent * generator(bfs_gen); identity is root.
    Elem bfs_parent(Elem a) const { return bfs_parent_[a]; }
    std::size_t bfs_gen(Elem a) const { return bfs_gen_[a]; }

    // Extends a map given on generators to the whole group along the BFS tree.
    // images[i] = image of generators()[i] in target group T.
    std::vector<Elem> extend_homomorphism(const FiniteGroup& target,
                                          const std::vector<Elem>& images) const {
        if (images.size() != gens_.size())
            throw std::invalid_argument("extend_homomorphism: image count mismatch");
        std::vector<Elem> img(n_);
        img[0] = 0;
        for (Elem a : bfs_order_)
            if (a != 0) img[a] = target.mul(img[bfs_parent_[a]], images[bfs_gen_[a]]);
        return img;
    }

    static std::shared_ptr<const FiniteGroup> from_permutations(
        std::size_t degree, const std::vector<std::vector<int>>& gens,
        std::size_t max_order = 10000, std::vector<std::string> labels = {});
    static std::shared_ptr<const FiniteGroup> semidirect(
        std::shared_ptr<const FiniteGroup> normal, long m, const std::vector<Elem>& theta,
        const std::string& cyclic_label = "w");
    static std::shared_ptr<const FiniteGroup> heisenberg(long p);
    static std::shared_ptr<const FiniteGroup> cyclic(long nn, const std::string& label = "g");
    static std::shared_ptr<const FiniteGroup> direct(
        const std::vector<std::shared_ptr<const FiniteGroup>>& factors);
    static std::shared_ptr<const FiniteGroup> quaternion8();

private:
    FiniteGroup() = default;

    void finish(std::vector<std::string> labels) {
        inv_.assign(n_, 0);
        for (Elem a = 0; a < n_; ++a)
            for (Elem b = 0; b < n_; ++b)
                if (mul(a, b) == 0) { inv_[a] = b; break; }
        gen_labels_ = std::move(labels);
        if (gen_labels_.size() != gens_.size())
            throw std::invalid_argument("generator label count mismatch");
        compute_bfs();
        compute_classes();
        compute_elem_labels();
    }

    void compute_bfs() {
        bfs_parent_.assign(n_, 0);
        bfs_gen_.assign(n_, 0);
        bfs_order_.clear();
        std::vector<char> seen(n_, 0);
        seen[0] = 1;
        bfs_order_.push_back(0);
        for (std::size_t head = 0; head < bfs_order_.size(); ++head) {
            Elem u = bfs_order_[head];
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                Elem v = mul(u, gens_[gi]);
                if (!seen[v]) {
                    seen[v] = 1;
                    bfs_parent_[v] = u;
                    bfs_gen_[v] = gi;
                    bfs_order_.push_back(v);
                }
            }
        }
        if (bfs_order_.size() != n_)
            throw std::invalid_argument("generators do not generate the group");
    }

    void compute_classes() {
        class_id_.assign(n_, n_);
        for (Elem a = 0; a < n_; ++a) {
            if (class_id_[a] != n_) continue;
            std::size_t id = classes_.size();
            std::vector<Elem> cls;
            std::vector<Elem> stack{a};
            class_id_[a] = id;
            while (!stack.empty()) {
                Elem u = stack.back(); stack.pop_back();
                cls.push_back(u);
                for (Elem g : gens_) {
                    Elem v = conj(u, g);
                    if (class_id_[v] == n_) { class_id_[v] = id; stack.push_back(v); }
                }
            }
            std::sort(cls.begin(), cls.end());
            classes_.push_back(std::move(cls));
        }
    }

    void compute_elem_labels() {
        elem_labels_.assign(n_, "");
        elem_labels_[0] = "1";
        for (Elem a : bfs_order_) {
            if (a == 0) continue;
            Elem p = bfs_parent_[a];
            const std::string& g = gen_labels_[bfs_gen_[a]];
            elem_labels_[a] = (p == 0) ? g : elem_labels_[p] + "*" + g;
        }
    }

    std::size_t n_ = 0;
    std::vector<Elem> table_;
    std::vector<Elem> inv_;
    std::vector<Elem> gens_;
    std::vector<std::string> gen_labels_;
    std::vector<std::string> elem_labels_;
    std::vector<Elem> bfs_parent_, bfs_order_;
    std::vector<std::size_t> bfs_gen_;
    std::vector<std::vector<Elem>> classes_;
    std::vector<std::size_t> class_id_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr FiniteGroup::from_permutations(std::size_t degree,
                                               const std::vector<std::vector<int>>& gens,
                                               std::size_t max_order,
                                               std::vector<std::string> labels) {
    using Perm = std::vector<int>;
    Perm id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = int(i + 1);
    for (const Perm& p : gens) {
        if (p.size() != degree) throw std::invalid_argument("permutation degree mismatch");
        std::vector<char> hit(degree, 0);
        for (int v : p) {
            if (v < 1 || std::size_t(v) > degree || hit[v - 1])
                throw std::invalid_argument("not a permutation of {1..degree}");
            hit[v - 1] = 1;
        }
    }
    // compose(a,b) = apply a first, then b
    auto compose = [&](const Perm& a, const Perm& b) {
        Perm r(degree);
        for (std::size_t i = 0; i < degree; ++i) r[i] = b[a[i] - 1];
        return r;
    };
    std::vector<Perm> elems{id};
    std::map<Perm, Elem> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const Perm& g : gens) {
            Perm v = compose(elems[head], g);
            if (!index.count(v)) {
                if (elems.size() >= max_order)
                    throw std::runtime_error("order bound exceeded");
                index[v] = Elem(elems.size());
                elems.push_back(std::move(v));
            }
        }
    }
    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    G->n_ = elems.size();
    G->table_.assign(G->n_ * G->n_, 0);
    for (std::size_t a = 0; a < G->n_; ++a)
        for (std::size_t b = 0; b < G->n_; ++b)
            G->table_[a * G->n_ + b] = index.at(compose(elems[a], elems[b]));
    for (const Perm& g : gens) G->gens_.push_back(index.at(g));
    if (labels.empty())
        for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("g" + std::to_string(i + 1));
    G->finish(std::move(labels));
    return G;
}

// N x| C_m with the C_m generator acting by the automorphism theta (given on
// all of N). Elements are pairs (n, j) indexed j*|N|+n; (n1,i)(n2,j) =
// (n1*theta^i(n2), i+j mod m).
inline GroupPtr FiniteGroup::semidirect(GroupPtr normal, long m, const std::vector<Elem>& theta,
                                        const std::string& cyclic_label) {
    const FiniteGroup& N = *normal;
    std::size_t nn = N.order();
    if (theta.size() != nn) throw std::invalid_argument("theta must be defined on all of N");
    // automorphism check
    if (theta[0] != 0) throw std::runtime_error("theta not an automorphism: theta(1) != 1");
    {
        std::vector<char> hit(nn, 0);
        for (Elem v : theta) {
            if (v >= nn || hit[v]) throw std::runtime_error("theta not an automorphism: not bijective");
            hit[v] = 1;
        }
        for (Elem a = 0; a < nn; ++a)
            for (Elem b = 0; b < nn; ++b)
                if (theta[N.mul(a, b)] != N.mul(theta[a], theta[b])) {
                    std::ostringstream os;
                    os << "theta not an automorphism: fails at pair (" << a << "," << b << ")";
                    throw std::runtime_error(os.str());
                }
    }
    // theta^m = id
    std::vector<std::vector<Elem>> theta_pow(m + 1);
    theta_pow[0].resize(nn);
    for (Elem a = 0; a < nn; ++a) theta_pow[0][a] = a;
    for (long i = 1; i <= m; ++i) {
        theta_pow[i].resize(nn);
        for (Elem a = 0; a < nn; ++a) theta_pow[i][a] = theta[theta_pow[i - 1][a]];
    }
    for (Elem a = 0; a < nn; ++a)
        if (theta_pow[m][a] != a) {
            std::ostringstream os;
            os << "theta^m != id: fails at element " << a;
            throw std::runtime_error(os.str());
        }

    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    G->n_ = nn * std::size_t(m);
    G->table_.assign(G->n_ * G->n_, 0);
    auto idx = [&](Elem n, long j) { return Elem(std::size_t(j) * nn + n); };
    for (long i = 0; i < m; ++i)
        for (Elem n1 = 0; n1 < nn; ++n1)
            for (long j = 0; j < m; ++j)
                for (Elem n2 = 0; n2 < nn; ++n2)
                    G->table_[std::size_t(idx(n1, i)) * G->n_ + idx(n2, j)] =
                        idx(N.mul(n1, theta_pow[i][n2]), (i + j) % m);
    std::vector<std::string> labels = N.generator_labels();
    for (Elem g : N.generators()) G->gens_.push_back(idx(g, 0));
    if (m > 1) {
        G->gens_.push_back(idx(0, 1));
        labels.push_back(cyclic_label);
    }
    G->finish(std::move(labels));
    return G;
}

// Extraspecial p-group of order p^3 and exponent p:
//   x^p = y^p = z^p = e, xy = yx, yz = zyx, xz = zx.
// Elements are x^a y^b z^c indexed a + p*b + p^2*c.
inline GroupPtr FiniteGroup::heisenberg(long p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("heisenberg: p must be an odd prime");
    if (p > 13) throw std::invalid_argument("heisenberg: p > 13 unsupported (desk scale)");
    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    std::size_t n = std::size_t(p) * p * p;
    G->n_ = n;
    G->table_.assign(n * n, 0);
    auto idx = [&](long a, long b, long c) {
        return Elem(mod_pos(a, p) + p * mod_pos(b, p) + p * p * mod_pos(c, p));
    };
    // z^c y^b' = y^b' z^c x^{-c b'}
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long a2 = 0; a2 < p; ++a2)
                    for (long b2 = 0; b2 < p; ++b2)
                        for (long c2 = 0; c2 < p; ++c2)
                            G->table_[std::size_t(idx(a, b, c)) * n + idx(a2, b2, c2)] =
                                idx(a + a2 - c * b2, b + b2, c + c2);
    G->gens_ = {idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)};
    G->finish({"x", "y", "z"});
    return G;
}

inline GroupPtr FiniteGroup::cyclic(long nn, const std::string& label) {
    if (nn < 1) throw std::invalid_argument("cyclic: n must be positive");
    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    G->n_ = std::size_t(nn);
    G->table_.assign(G->n_ * G->n_, 0);
    for (long a = 0; a < nn; ++a)
        for (long b = 0; b < nn; ++b) G->table_[std::size_t(a) * nn + b] = Elem((a + b) % nn);
    if (nn > 1) {
        G->gens_ = {1};
        G->finish({label});
    } else {
        G->finish({});
    }
    return G;
}

inline GroupPtr FiniteGroup::direct(const std::vector<GroupPtr>& factors) {
    if (factors.empty()) return cyclic(1);
    auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    std::size_t n = 1;
    for (auto& f : factors) n *= f->order();
    G->n_ = n;
    G->table_.assign(n * n, 0);
    auto decompose = [&](Elem e) {
        std::vector<Elem> parts;
        for (auto& f : factors) {
            parts.push_back(Elem(e % f->order()));
            e = Elem(e / f->order());
        }
        return parts;
    };
    auto compose = [&](const std::vector<Elem>& parts) {
        Elem e = 0;
        for (std::size_t i = factors.size(); i-- > 0;) e = Elem(e * factors[i]->order() + parts[i]);
        return e;
    };
    for (Elem a = 0; a < n; ++a) {
        auto pa = decompose(a);
        for (Elem b = 0; b < n; ++b) {
            auto pb = decompose(b);
            std::vector<Elem> pc(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i) pc[i] = factors[i]->mul(pa[i], pb[i]);
            G->table_[std::size_t(a) * n + b] = compose(pc);
        }
    }
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = *factors[i];
        for (std::size_t gi = 0; gi < f.generators().size(); ++gi) {
            std::vector<Elem> parts(factors.size(), 0);
            parts[i] = f.generators()[gi];
            G->gens_.push_back(compose(parts));
            const std::string& lab = f.generator_labels()[gi];
            if (!seen.insert(lab).second)
                throw std::invalid_argument("direct: duplicate generator label '" + lab +
                                            "'; relabel a factor");
            labels.push_back(lab);
        }
    }
    G->finish(std::move(labels));
    return G;
}

inline GroupPtr FiniteGroup::quaternion8() {
    // x = (1 2 3 4)(5 6 7 8), y = (1 5 3 7)(2 8 4 6)
    return from_permutations(
        8, {{2, 3, 4, 1, 6, 7, 8, 5}, {5, 8, 7, 6, 3, 2, 1, 4}}, 10000, {"x", "y"});
}

// A subgroup, stored as a sorted member list + membership mask + a small
// generating set (computed greedily, deterministic).
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<Elem> members;
    Bitset mask;
    std::vector<Elem> gens;

    std::size_t order() const { return members.size(); }
    bool contains(Elem g) const { return mask.test(g); }
    bool operator==(const Subgroup& o) const { return parent == o.parent && members == o.members; }
    bool contains_subgroup(const Subgroup& s) const { return s.mask.is_subset_of(mask); }
};

inline std::vector<Elem> closure_of(const FiniteGroup& G, const std::vector<Elem>& seeds,
                                    Bitset* mask_out = nullptr) {
    Bitset mask(G.order());
    std::vector<Elem> got{0};
    mask.set(0);
    for (Elem s : seeds)
        if (!mask.test(s)) { mask.set(s); got.push_back(s); }
    for (std::size_t head = 0; head < got.size(); ++head)
        for (Elem s : seeds) {
            Elem v = G.mul(got[head], s);
            if (!mask.test(v)) { mask.set(v); got.push_back(v); }
        }
    std::sort(got.begin(), got.end());
    if (mask_out) *mask_out = mask;
    return got;
}

inline Subgroup make_subgroup(const FiniteGroup& G, std::vector<Elem> members) {
    Subgroup S;
    S.parent = &G;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    S.members = std::move(members);
    S.mask = Bitset(G.order());
    for (Elem m : S.members) S.mask.set(m);
    // greedy small generating set
    Bitset cur(G.order());
    cur.set(0);
    std::size_t cur_size = 1;
    for (Elem m : S.members) {
        if (cur.test(m)) continue;
        S.gens.push_back(m);
        Bitset nm;
        std::vector<Elem> cl = closure_of(G, S.gens, &nm);
        cur = nm;
        cur_size = cl.size();
        if (cur_size == S.members.size()) break;
    }
    if (cur_size != S.members.size())
        throw std::invalid_argument("make_subgroup: member list is not closed");
    return S;
}

inline Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<Elem>& seeds) {
    return make_subgroup(G, closure_of(G, seeds));
}

inline Subgroup whole_group(const FiniteGroup& G) {
    std::vector<Elem> all(G.order());
    for (Elem i = 0; i < G.order(); ++i) all[i] = i;
    return make_subgroup(G, std::move(all));
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) { return make_subgroup(G, {0}); }

inline Subgroup conjugate_subgroup(const Subgroup& S, Elem g) {
    const FiniteGroup& G = *S.parent;
    std::vector<Elem> m;
    m.reserve(S.members.size());
    for (Elem s : S.members) m.push_back(G.conj(s, g));
    return make_subgroup(G, std::move(m));
}

inline bool is_normal(const Subgroup& S, const Subgroup& in) {
    const FiniteGroup& G = *S.parent;
    for (Elem g : in.gens)
        for (Elem s : S.gens)
            if (!S.contains(G.conj(s, g))) return false;
    return true;
}

inline Subgroup normalizer(const FiniteGroup& G, const Subgroup& S) {
    std::vector<Elem> m;
    for (Elem g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (Elem s : S.gens)
            if (!S.contains(G.conj(s, g))) { ok = false; break; }
        if (ok) m.push_back(g);
    }
    return make_subgroup(G, std::move(m));
}

inline Subgroup centralizer_set(const FiniteGroup& G, const std::vector<Elem>& set) {
    std::vector<Elem> m;
    for (Elem g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (Elem s : set)
            if (G.mul(g, s) != G.mul(s, g)) { ok = false; break; }
        if (ok) m.push_back(g);
    }
    return make_subgroup(G, std::move(m));
}

// [H,g] = < g^-1 h^-1 g h : h in H >
inline Subgroup commutator_subgroup_with(const Subgroup& H, Elem g) {
    const FiniteGroup& G = *H.parent;
    std::vector<Elem> seeds;
    seeds.reserve(H.members.size());
    for (Elem h : H.members)
        seeds.push_back(G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h)));
    return subgroup_generated(G, seeds);
}

// If H/K is cyclic (K normal in H), returns (generator coset rep, [H:K]) with
// the rep minimal in canonical element order; otherwise nullopt.
inline std::optional<std::pair<Elem, long>> cyclic_quotient_data(const Subgroup& H,
                                                                 const Subgroup& K) {
    const FiniteGroup& G = *H.parent;
    if (!K.mask.is_subset_of(H.mask)) throw std::invalid_argument("cyclic_quotient_data: K must be contained in H");
    if (!is_normal(K, H)) throw std::invalid_argument("cyclic_quotient_data: K not normal in H");
    long q = long(H.order() / K.order());
    for (Elem h : H.members) {
        // order of hK in H/K
        long o = 1;
        Elem v = h;
        while (!K.contains(v)) { v = G.mul(v, h); ++o; }
        if (o == q) return std::make_pair(h, q);
    }
    return std::nullopt;
}

// One representative per left coset gS of S in T; reps are the minimal element
// of each coset, listed in increasing order (identity first).
inline std::vector<Elem> left_transversal(const Subgroup& S, const Subgroup& T) {
    const FiniteGroup& G = *S.parent;
    if (!S.mask.is_subset_of(T.mask)) throw std::invalid_argument("left_transversal: S must be contained in T");
    Bitset covered(G.order());
    std::vector<Elem> reps;
    for (Elem t : T.members) {
        if (covered.test(t)) continue;
        reps.push_back(t);
        for (Elem s : S.members) covered.set(G.mul(t, s));
    }
    return reps;
}

// All subgroups: close the set of cyclic subgroups under pairwise join.
// Sorted by (order, member list).
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G, std::size_t bound = 2000) {
    if (G.order() > bound)
        throw std::runtime_error("all_subgroups: order bound exceeded; supply explicit pairs");
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup> subs;
    std::vector<Subgroup> cyclics;
    for (Elem g = 0; g < G.order(); ++g) {
        Subgroup c = subgroup_generated(G, {g});
        if (seen.insert(c.members).second) {
            cyclics.push_back(c);
            subs.push_back(c);
        }
    }
    for (std::size_t head = 0; head < subs.size(); ++head) {
        for (const Subgroup& c : cyclics) {
            if (c.mask.is_subset_of(subs[head].mask)) continue;
            std::vector<Elem> seeds = subs[head].gens;
            seeds.insert(seeds.end(), c.gens.begin(), c.gens.end());
            Subgroup j = subgroup_generated(G, seeds);
            if (seen.insert(j.members).second) subs.push_back(j);
        }
    }
    std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members < b.members;
    });
    return subs;
}

inline Subgroup intersect_subgroups(const Subgroup& A, const Subgroup& B) {
    std::vector<Elem> m;
    for (Elem a : A.members)
        if (B.contains(a)) m.push_back(a);
    return make_subgroup(*A.parent, std::move(m));
}

} // namespace wedderburn

#endif
