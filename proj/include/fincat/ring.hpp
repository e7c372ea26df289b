#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fincat/fn.hpp"

namespace fincat {

// A finite unital ring as explicit addition/multiplication tables.
struct RingTable {
    std::string name;
    std::vector<std::string> elems;
    std::vector<int> add, mul;  // flat n*n
    int zero = 0, one = 0;

    int n() const { return static_cast<int>(elems.size()); }
    int a(int x, int y) const { return add[static_cast<size_t>(x) * elems.size() + y]; }
    int m(int x, int y) const { return mul[static_cast<size_t>(x) * elems.size() + y]; }
    bool trivial() const { return one == zero; }  // the zero ring, permitted but flagged
};

inline void validate_ring(const RingTable& r) {
    const int n = r.n();
    auto fail = [&](const std::string& what) { throw invalid_argument("ring '" + r.name + "': " + what); };
    if (n == 0 || static_cast<int>(r.add.size()) != n * n || static_cast<int>(r.mul.size()) != n * n)
        fail("malformed tables");
    for (int x = 0; x < n; ++x) {
        if (r.a(x, r.zero) != x || r.a(r.zero, x) != x) fail("0 is not an additive unit");
        if (r.m(x, r.one) != x || r.m(r.one, x) != x) fail("1 is not a multiplicative unit");
        bool has_neg = false;
        for (int y = 0; y < n; ++y) has_neg |= r.a(x, y) == r.zero;
        if (!has_neg) fail("missing additive inverse");
        for (int y = 0; y < n; ++y) {
            if (r.a(x, y) != r.a(y, x)) fail("addition is not commutative");
            for (int z = 0; z < n; ++z) {
                if (r.a(r.a(x, y), z) != r.a(x, r.a(y, z))) fail("addition is not associative");
                if (r.m(r.m(x, y), z) != r.m(x, r.m(y, z))) fail("multiplication is not associative");
                if (r.m(x, r.a(y, z)) != r.a(r.m(x, y), r.m(x, z))) fail("left distributivity fails");
                if (r.m(r.a(x, y), z) != r.a(r.m(x, z), r.m(y, z))) fail("right distributivity fails");
            }
        }
    }
}

inline int ring_neg(const RingTable& r, int x) {
    for (int y = 0; y < r.n(); ++y)
        if (r.a(x, y) == r.zero) return y;
    throw internal_error("ring_neg: validated ring without inverses");
}

inline bool is_central(const RingTable& r, int z) {
    for (int s = 0; s < r.n(); ++s)
        if (r.m(z, s) != r.m(s, z)) return false;
    return true;
}

inline bool is_central_idempotent(const RingTable& r, int z) { return r.m(z, z) == z && is_central(r, z); }

struct RingMorphism {
    RingTable source, target;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
};

inline RingMorphism make_ring_morphism(RingTable src, RingTable tgt, std::vector<int> map,
                                       const std::string& what = "φ") {
    if (static_cast<int>(map.size()) != src.n()) throw invalid_argument(what + ": wrong length");
    if (map[src.one] != tgt.one) throw invalid_argument(what + ": does not preserve 1");
    for (int x = 0; x < src.n(); ++x)
        for (int y = 0; y < src.n(); ++y) {
            if (map[src.a(x, y)] != tgt.a(map[x], map[y])) throw invalid_argument(what + ": not additive");
            if (map[src.m(x, y)] != tgt.m(map[x], map[y])) throw invalid_argument(what + ": not multiplicative");
        }
    return {std::move(src), std::move(tgt), std::move(map)};
}

// ---------------------------------------------------------------------------
// Truncated free-module categories: objects are ranks 0..max_rank, morphisms
// R^m → R^n are the n×m matrices, composition is matrix product.

struct ModuleCat {
    RingTable ring;
    int max_rank = 0;
    Cat cat;
    std::vector<std::vector<int64_t>> block_start;  // [dom rank][cod rank] -> first morphism id

    int entries_of(int m, int n) const { return n * m; }

    // matrices are encoded big-endian in row-major entry order, so morphism
    // ids within a block are in lexicographic matrix order
    MorId mor_of_matrix(int m, int n, const std::vector<int>& a) const {
        int64_t idx = 0;
        for (int e : a) idx = idx * ring.n() + e;
        return static_cast<MorId>(block_start[m][n] + idx);
    }
    std::vector<int> matrix_of(MorId f) const {
        int m = cat->dom(f), n = cat->cod(f);
        int64_t idx = f - block_start[m][n];
        std::vector<int> a(entries_of(m, n));
        for (int i = entries_of(m, n) - 1; i >= 0; --i) {
            a[i] = static_cast<int>(idx % ring.n());
            idx /= ring.n();
        }
        return a;
    }
};

inline std::vector<int> matrix_mul(const RingTable& r, int k, int n, int m, const std::vector<int>& g,
                                   const std::vector<int>& f) {
    // g : R^n → R^k (k×n), f : R^m → R^n (n×m); product is k×m
    std::vector<int> out(static_cast<size_t>(k) * m, r.zero);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) {
            int acc = r.zero;
            for (int l = 0; l < n; ++l) acc = r.a(acc, r.m(g[i * n + l], f[l * m + j]));
            out[i * m + j] = acc;
        }
    return out;
}

inline std::string matrix_name(const RingTable& r, int m, int n, const std::vector<int>& a) {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
        if (i) s += ";";
        for (int j = 0; j < m; ++j) {
            if (j) s += ",";
            s += r.elems[a[i * m + j]];
        }
    }
    return s + "]";
}

inline ModuleCat free_module_cat(const RingTable& ring, int max_rank, const Budget& budget = Budget::current()) {
    validate_ring(ring);
    if (max_rank < 0) throw invalid_argument("free_module_cat: negative rank");
    ModuleCat out;
    out.ring = ring;
    out.max_rank = max_rank;
    int64_t total = 0;
    for (int m = 0; m <= max_rank; ++m)
        for (int n = 0; n <= max_rank; ++n) {
            int64_t cnt = 1;
            for (int i = 0; i < m * n; ++i) {
                cnt *= ring.n();
                if (cnt > budget.max_morphisms) throw budget_error("free_module_cat: too many matrices");
            }
            total += cnt;
        }
    check_size_caps(max_rank + 1, total, "free_module_cat", budget);

    CatBuilder b(ring.name + "-mod" + std::to_string(max_rank));
    for (int n = 0; n <= max_rank; ++n) b.add_object("R^" + std::to_string(n));
    out.block_start.assign(max_rank + 1, std::vector<int64_t>(max_rank + 1, 0));
    for (int m = 0; m <= max_rank; ++m)
        for (int n = 0; n <= max_rank; ++n) {
            out.block_start[m][n] = b.n_mor();
            std::vector<int> a(static_cast<size_t>(m) * n, 0);
            int64_t cnt = 1;
            for (int i = 0; i < m * n; ++i) cnt *= ring.n();
            for (int64_t idx = 0; idx < cnt; ++idx) {
                int64_t rest = idx;
                for (int i = m * n - 1; i >= 0; --i) {
                    a[i] = static_cast<int>(rest % ring.n());
                    rest /= ring.n();
                }
                // ranks in the name keep morphism names globally unique
                b.add_morphism(matrix_name(ring, m, n, a) + "@" + std::to_string(m) + "," + std::to_string(n), m, n);
            }
        }
    auto mor_of = [&](int m, int n, const std::vector<int>& a) -> MorId {
        int64_t idx = 0;
        for (int e : a) idx = idx * ring.n() + e;
        return static_cast<MorId>(out.block_start[m][n] + idx);
    };
    auto entries = [&](MorId f) {
        int m = b.mor(f).dom, n = b.mor(f).cod;
        int64_t idx = f - out.block_start[m][n];
        std::vector<int> a(static_cast<size_t>(m) * n);
        for (int i = m * n - 1; i >= 0; --i) {
            a[i] = static_cast<int>(idx % ring.n());
            idx /= ring.n();
        }
        return a;
    };
    for (int n = 0; n <= max_rank; ++n) {
        std::vector<int> eye(static_cast<size_t>(n) * n, ring.zero);
        for (int i = 0; i < n; ++i) eye[i * n + i] = ring.one;
        b.set_identity(n, mor_of(n, n, eye));
    }
    for (MorId f = 0; f < b.n_mor(); ++f)
        for (MorId g = 0; g < b.n_mor(); ++g) {
            int m = b.mor(f).dom, n = b.mor(f).cod, k = b.mor(g).cod;
            if (b.mor(g).dom != n) continue;
            b.set_comp(g, f, mor_of(m, k, matrix_mul(ring, k, n, m, entries(g), entries(f))));
        }
    out.cat = b.finish();
    return out;
}

// ---------------------------------------------------------------------------
// Induction and restriction of scalars on truncated free-module categories.

struct Induction {
    Fn fn;
    bool zero_target = false;  // S = 0: the faithfulness guarantee does not apply
};

// R^n ↦ S^n, matrices entrywise through φ.
inline Induction induction_functor(const RingMorphism& phi, const ModuleCat& src, const ModuleCat& tgt) {
    if (tgt.max_rank < src.max_rank) throw invalid_argument("induction_functor: target rank bound too small");
    std::vector<ObjId> oo(src.max_rank + 1);
    std::vector<MorId> om(src.cat->n_mor());
    for (int n = 0; n <= src.max_rank; ++n) oo[n] = n;
    for (MorId f = 0; f < src.cat->n_mor(); ++f) {
        std::vector<int> a = src.matrix_of(f);
        for (int& e : a) e = phi(e);
        om[f] = tgt.mor_of_matrix(src.cat->dom(f), src.cat->cod(f), a);
    }
    return {make_functor(src.cat, tgt.cat, std::move(oo), std::move(om), phi.target.name + "⊗-"),
            phi.target.trivial()};
}

// Coordinates of s in the left R-basis {b_l}: the unique (r_l) with
// s = Σ φ(r_l)·b_l.  Fails (NotABasis) when existence or uniqueness does.
inline std::vector<std::vector<int>> basis_coordinates(const RingMorphism& phi, const std::vector<int>& basis) {
    const RingTable& s = phi.target;
    const RingTable& r = phi.source;
    const int d = static_cast<int>(basis.size());
    int64_t count = 1;
    for (int i = 0; i < d; ++i) {
        count *= r.n();
        if (count > 1'000'000) throw budget_error("basis_coordinates: coordinate space too large");
    }
    std::vector<std::vector<int>> coords(s.n());
    std::vector<char> seen(s.n(), 0);
    std::vector<int> tuple(d, 0);
    for (int64_t idx = 0; idx < count; ++idx) {
        int64_t rest = idx;
        for (int i = d - 1; i >= 0; --i) {
            tuple[i] = static_cast<int>(rest % r.n());
            rest /= r.n();
        }
        int val = s.zero;
        for (int i = 0; i < d; ++i) val = s.a(val, s.m(phi(tuple[i]), basis[i]));
        if (seen[val]) throw invalid_argument("NotABasis: coordinates of " + s.elems[val] + " are not unique");
        seen[val] = 1;
        coords[val] = tuple;
    }
    for (int v = 0; v < s.n(); ++v)
        if (!seen[v]) throw invalid_argument("NotABasis: " + s.elems[v] + " is not a combination of the basis");
    return coords;
}

// S^n ↦ R^{dn}; an S-entry acts as the d×d matrix of its multiplication in the
// basis, so an n×m S-matrix expands blockwise to a dn×dm R-matrix.
inline Fn restriction_functor(const RingMorphism& phi, const std::vector<int>& basis, const ModuleCat& src,
                              const ModuleCat& tgt) {
    const RingTable& s = phi.target;
    const int d = static_cast<int>(basis.size());
    if (tgt.max_rank < d * src.max_rank)
        throw invalid_argument("restriction_functor: target rank bound too small");
    auto coords = basis_coordinates(phi, basis);
    // mult_mat[x] : d×d matrix of right multiplication carried to coordinates,
    // column l holds the coordinates of x·b_l
    std::vector<std::vector<int>> mult_mat(s.n(), std::vector<int>(static_cast<size_t>(d) * d));
    for (int x = 0; x < s.n(); ++x)
        for (int l = 0; l < d; ++l) {
            const auto& co = coords[s.m(x, basis[l])];
            for (int t = 0; t < d; ++t) mult_mat[x][t * d + l] = co[t];
        }
    std::vector<ObjId> oo(src.max_rank + 1);
    std::vector<MorId> om(src.cat->n_mor());
    for (int n = 0; n <= src.max_rank; ++n) oo[n] = d * n;
    for (MorId f = 0; f < src.cat->n_mor(); ++f) {
        int m = src.cat->dom(f), n = src.cat->cod(f);
        std::vector<int> a = src.matrix_of(f);
        std::vector<int> big(static_cast<size_t>(d) * n * d * m, tgt.ring.zero);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                const auto& blk = mult_mat[a[i * m + j]];
                for (int t = 0; t < d; ++t)
                    for (int l = 0; l < d; ++l) big[(i * d + t) * (d * m) + (j * d + l)] = blk[t * d + l];
            }
        om[f] = tgt.mor_of_matrix(d * m, d * n, big);
    }
    return make_functor(src.cat, tgt.cat, std::move(oo), std::move(om), "res");
}

// e_M : M → M, m ↦ zm, as the natural family of scalar matrices diag(z).
inline Nat central_idempotent_nat(const ModuleCat& mc, int z) {
    if (!is_central_idempotent(mc.ring, z))
        throw invalid_argument("central_idempotent_nat: element is not a central idempotent");
    std::vector<MorId> at(mc.max_rank + 1);
    for (int n = 0; n <= mc.max_rank; ++n) {
        std::vector<int> diag(static_cast<size_t>(n) * n, mc.ring.zero);
        for (int i = 0; i < n; ++i) diag[i * n + i] = z;
        at[n] = mc.mor_of_matrix(n, n, diag);
    }
    Fn id = identity_functor(mc.cat);
    return make_nat(id, id, std::move(at));
}

// ---------------------------------------------------------------------------
// Bimodule-level searches mirroring the functor-level classifications.

struct BimoduleRetraction {
    std::optional<std::vector<int>> split;    // E with E∘φ = Id
    std::optional<std::vector<int>> regular;  // E with φ∘E∘φ = φ
};

// Exhaustive search over additive R-bimodule maps E : S → R, lexicographic.
inline BimoduleRetraction bimodule_retraction_search(const RingMorphism& phi) {
    const RingTable& s = phi.target;
    const RingTable& r = phi.source;
    int64_t count = 1;
    for (int i = 0; i < s.n(); ++i) {
        count *= r.n();
        if (count > 50'000'000) throw budget_error("bimodule_retraction_search: map space too large");
    }
    BimoduleRetraction out;
    std::vector<int> e(s.n(), 0);
    for (int64_t idx = 0; idx < count && (!out.split || !out.regular); ++idx) {
        int64_t rest = idx;
        for (int i = s.n() - 1; i >= 0; --i) {
            e[i] = static_cast<int>(rest % r.n());
            rest /= r.n();
        }
        bool ok = true;
        for (int x = 0; x < s.n() && ok; ++x)
            for (int y = 0; y < s.n() && ok; ++y) ok = e[s.a(x, y)] == r.a(e[x], e[y]);
        for (int a = 0; a < r.n() && ok; ++a)
            for (int x = 0; x < s.n() && ok; ++x)
                for (int b = 0; b < r.n() && ok; ++b)
                    ok = e[s.m(phi(a), s.m(x, phi(b)))] == r.m(a, r.m(e[x], b));
        if (!ok) continue;
        bool splits = true, reg = true;
        for (int a = 0; a < r.n(); ++a) {
            splits = splits && e[phi(a)] == a;
            reg = reg && phi(e[phi(a)]) == phi(a);
        }
        if (splits && !out.split) out.split = e;
        if (reg && !out.regular) out.regular = e;
    }
    return out;
}

// Elements of S⊗_R S in the tuple realization x = Σ uᵢ⊗bᵢ; searches for a
// separability idempotent: m(x) = 1 and sx = xs for all s.
inline std::optional<std::vector<int>> separability_idempotent_search(const RingMorphism& phi,
                                                                      const std::vector<int>& basis) {
    const RingTable& s = phi.target;
    const int d = static_cast<int>(basis.size());
    auto coords = basis_coordinates(phi, basis);
    int64_t count = 1;
    for (int i = 0; i < d; ++i) {
        count *= s.n();
        if (count > 50'000'000) throw budget_error("separability_idempotent_search: tensor space too large");
    }
    // right action through structure constants: (x·t)_j = Σᵢ uᵢ·φ(c_ij) where
    // bᵢ·t = Σ_j φ(c_ij)·b_j
    auto right_act = [&](const std::vector<int>& u, int t) {
        std::vector<int> out(d, s.zero);
        for (int i = 0; i < d; ++i) {
            const auto& c = coords[s.m(basis[i], t)];
            for (int j = 0; j < d; ++j) out[j] = s.a(out[j], s.m(u[i], phi(c[j])));
        }
        return out;
    };
    std::vector<int> u(d, 0);
    for (int64_t idx = 0; idx < count; ++idx) {
        int64_t rest = idx;
        for (int i = d - 1; i >= 0; --i) {
            u[i] = static_cast<int>(rest % s.n());
            rest /= s.n();
        }
        int image = s.zero;
        for (int i = 0; i < d; ++i) image = s.a(image, s.m(u[i], basis[i]));
        if (image != s.one) continue;
        bool central = true;
        for (int t = 0; t < s.n() && central; ++t) {
            std::vector<int> left(d), right = right_act(u, t);
            for (int i = 0; i < d; ++i) left[i] = s.m(t, u[i]);
            central = left == right;
        }
        if (central) return u;
    }
    return std::nullopt;
}

}  // namespace fincat
