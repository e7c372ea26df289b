#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/adjoint.hpp"
#include "fincat/monadics.hpp"
#include "fincat/ring.hpp"

namespace fincat::gallery {

// ---------------------------------------------------------------------------
// Elementary categories.

inline Cat terminal() {
    CatBuilder b("1");
    ObjId o = b.add_object("*");
    MorId i = b.add_morphism("id", o, o);
    b.set_identity(o, i);
    b.set_comp(i, i, i);
    return b.finish();
}

inline Cat walking_idempotent() {
    CatBuilder b("E");
    ObjId o = b.add_object("*");
    MorId id = b.add_morphism("id", o, o);
    MorId e = b.add_morphism("e", o, o);
    b.set_identity(o, id);
    b.set_comp(id, id, id);
    b.set_comp(id, e, e);
    b.set_comp(e, id, e);
    b.set_comp(e, e, e);
    return b.finish();
}

// A preorder as a category: one morphism x → y whenever leq(x,y).
inline Cat preorder_cat(const std::string& name, int n, const std::function<bool(int, int)>& leq) {
    CatBuilder b(name);
    for (int i = 0; i < n; ++i) b.add_object("p" + std::to_string(i));
    std::vector<std::vector<MorId>> arrow(n, std::vector<MorId>(n, kNoMor));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && !leq(i, j)) throw invalid_argument("preorder_cat: relation is not reflexive");
            if (leq(i, j)) arrow[i][j] = b.add_morphism("le" + std::to_string(i) + std::to_string(j), i, j);
        }
    for (int i = 0; i < n; ++i) b.set_identity(i, arrow[i][i]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (arrow[i][j] != kNoMor && arrow[j][k] != kNoMor) {
                    if (arrow[i][k] == kNoMor) throw invalid_argument("preorder_cat: relation is not transitive");
                    b.set_comp(arrow[j][k], arrow[i][j], arrow[i][k]);
                }
    return b.finish();
}

inline Cat walking_arrow() {
    return preorder_cat("2", 2, [](int i, int j) { return i <= j; });
}
inline Cat chain(int n) {
    return preorder_cat("chain" + std::to_string(n), n, [](int i, int j) { return i <= j; });
}
inline Cat discrete(int n) {
    return preorder_cat("disc" + std::to_string(n), n, [](int i, int j) { return i == j; });
}
inline Cat indiscrete(int n) {
    return preorder_cat("indisc" + std::to_string(n), n, [](int, int) { return true; });
}

// 0 < a, b < 3 with a, b incomparable.
inline Cat diamond() {
    return preorder_cat("diamond", 4, [](int i, int j) {
        if (i == j || i == 0 || j == 3) return true;
        return false;
    });
}

// One-object category of a finite monoid given by its multiplication table.
inline Cat monoid_cat(const std::string& name, const std::vector<std::string>& elems, const std::vector<int>& table,
                      int unit) {
    const int n = static_cast<int>(elems.size());
    CatBuilder b(name);
    ObjId o = b.add_object("*");
    for (int i = 0; i < n; ++i) b.add_morphism(elems[i], o, o);
    b.set_identity(o, unit);
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) b.set_comp(g, f, table[static_cast<size_t>(g) * n + f]);
    Cat out;
    auto diags = CatBuilder(b).try_finish(out);  // revalidates the monoid axioms as category laws
    if (!diags.empty()) throw invalid_argument("monoid_cat '" + name + "': " + diags.front().detail);
    return out;
}

inline Cat monoid_z2() { return monoid_cat("z2", {"1", "a"}, {0, 1, 1, 0}, 0); }

inline Cat monoid_z3() {
    std::vector<int> t(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[static_cast<size_t>(i) * 3 + j] = (i + j) % 3;
    return monoid_cat("z3", {"1", "g", "gg"}, t, 0);
}

// The two-element monoid {1, z} with z² = z.
inline Cat monoid_idem() { return monoid_cat("m_idem", {"1", "z"}, {0, 1, 1, 1}, 0); }

// All four self-maps of a two-point set under composition.
inline Cat monoid_t2() {
    auto apply = [](int f, int x) { return f == 0 ? x : f == 1 ? 1 - x : f - 2; };
    std::vector<int> table(16);
    for (int g = 0; g < 4; ++g)
        for (int f = 0; f < 4; ++f) {
            int h0 = apply(g, apply(f, 0)), h1 = apply(g, apply(f, 1));
            table[static_cast<size_t>(g) * 4 + f] = (h0 == 0 && h1 == 1) ? 0 : (h0 == 1 && h1 == 0) ? 1 : 2 + h0;
        }
    return monoid_cat("t2", {"id", "swap", "c0", "c1"}, table, 0);
}

// Symmetric group on three letters, elements as permutation words.
inline Cat monoid_s3() {
    auto compose3 = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
        // (f∘g)(x) = f(g(x))
        return std::array<int, 3>{f[g[0]], f[g[1]], f[g[2]]};
    };
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    std::vector<std::string> names = {"1", "r", "rr", "s01", "s12", "s02"};
    std::vector<int> table(36);
    for (int g = 0; g < 6; ++g)
        for (int f = 0; f < 6; ++f) {
            auto gf = compose3(perms[g], perms[f]);
            for (int k = 0; k < 6; ++k)
                if (perms[k] == gf) table[static_cast<size_t>(g) * 6 + f] = k;
        }
    return monoid_cat("s3", names, table, 0);
}

inline Cat product_cat(const Cat& a, const Cat& b) {
    CatBuilder bb(a->name + "x" + b->name);
    for (ObjId x = 0; x < a->n_obj(); ++x)
        for (ObjId y = 0; y < b->n_obj(); ++y) bb.add_object("(" + a->objects[x] + "," + b->objects[y] + ")");
    auto obj = [&](ObjId x, ObjId y) { return x * b->n_obj() + y; };
    std::vector<std::pair<MorId, MorId>> info;
    for (MorId f = 0; f < a->n_mor(); ++f)
        for (MorId g = 0; g < b->n_mor(); ++g) {
            bb.add_morphism("(" + a->morphisms[f].name + "," + b->morphisms[g].name + ")",
                            obj(a->dom(f), b->dom(g)), obj(a->cod(f), b->cod(g)));
            info.emplace_back(f, g);
        }
    auto mor = [&](MorId f, MorId g) { return f * b->n_mor() + g; };
    for (ObjId x = 0; x < a->n_obj(); ++x)
        for (ObjId y = 0; y < b->n_obj(); ++y) bb.set_identity(obj(x, y), mor(a->id(x), b->id(y)));
    for (size_t m1 = 0; m1 < info.size(); ++m1)
        for (size_t m2 = 0; m2 < info.size(); ++m2) {
            auto [f1, g1] = info[m1];
            auto [f2, g2] = info[m2];
            if (a->composable(f2, f1) && b->composable(g2, g1))
                bb.set_comp(static_cast<MorId>(m2), static_cast<MorId>(m1), mor(a->comp(f2, f1), b->comp(g2, g1)));
        }
    return bb.finish();
}

// ---------------------------------------------------------------------------
// Rings.

inline RingTable ring_f2() {
    RingTable r{"f2", {"0", "1"}, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 1};
    validate_ring(r);
    return r;
}

inline RingTable ring_zero() {
    RingTable r{"zero", {"0"}, {0}, {0}, 0, 0};
    validate_ring(r);
    return r;
}

inline RingTable ring_z4() {
    RingTable r{"z4", {"0", "1", "2", "3"}, {}, {}, 0, 1};
    r.add.resize(16);
    r.mul.resize(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            r.add[static_cast<size_t>(i) * 4 + j] = (i + j) % 4;
            r.mul[static_cast<size_t>(i) * 4 + j] = (i * j) % 4;
        }
    validate_ring(r);
    return r;
}

// 𝔽₄ = 𝔽₂(ω), ω² = ω + 1; elements 0, 1, w, w1 = ω+1.
inline RingTable ring_f4() {
    RingTable r{"f4", {"0", "1", "w", "w1"}, {}, {}, 0, 1};
    auto add = [](int a, int b) { return a ^ b; };
    auto mul = [](int a, int b) {
        if (a == 0 || b == 0) return 0;
        // nonzero elements are 1=x^0, w=x^1, w1=x^2 in the cyclic group of order 3
        auto lg = [](int v) { return v == 1 ? 0 : v == 2 ? 1 : 2; };
        int p = (lg(a) + lg(b)) % 3;
        return p == 0 ? 1 : p == 1 ? 2 : 3;
    };
    r.add.resize(16);
    r.mul.resize(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            r.add[static_cast<size_t>(i) * 4 + j] = add(i, j);
            r.mul[static_cast<size_t>(i) * 4 + j] = mul(i, j);
        }
    validate_ring(r);
    return r;
}

// 𝔽₂×𝔽₂ with componentwise operations; elements encoded as bit pairs.
inline RingTable ring_f2x2() {
    RingTable r{"f2x2", {"(0,0)", "(1,0)", "(0,1)", "(1,1)"}, {}, {}, 0, 3};
    r.add.resize(16);
    r.mul.resize(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            r.add[static_cast<size_t>(i) * 4 + j] = i ^ j;
            r.mul[static_cast<size_t>(i) * 4 + j] = i & j;
        }
    validate_ring(r);
    return r;
}

// 𝔽₂[x]/(x²); elements a + bx encoded as a + 2b.
inline RingTable ring_f2x() {
    RingTable r{"f2x", {"0", "1", "x", "1x"}, {}, {}, 0, 1};
    r.add.resize(16);
    r.mul.resize(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            r.add[static_cast<size_t>(i) * 4 + j] = i ^ j;
            int a = i & 1, b = i >> 1, c = j & 1, d = j >> 1;
            r.mul[static_cast<size_t>(i) * 4 + j] = (a & c) | (((a & d) ^ (b & c)) << 1);  // x² = 0
        }
    validate_ring(r);
    return r;
}

inline RingTable ring_by_name(const std::string& name) {
    if (name == "f2") return ring_f2();
    if (name == "f4") return ring_f4();
    if (name == "f2x2") return ring_f2x2();
    if (name == "f2x") return ring_f2x();
    if (name == "z4") return ring_z4();
    if (name == "zero") return ring_zero();
    throw invalid_argument("unknown ring: " + name);
}

inline RingMorphism morphism_f2_diag_f2x2() {
    return make_ring_morphism(ring_f2(), ring_f2x2(), {0, 3}, "diag");
}
inline RingMorphism morphism_f2_into_f4() { return make_ring_morphism(ring_f2(), ring_f4(), {0, 1}, "incl"); }
inline RingMorphism morphism_f2_into_f2x() { return make_ring_morphism(ring_f2(), ring_f2x(), {0, 1}, "incl"); }
inline RingMorphism morphism_f2_to_zero() { return make_ring_morphism(ring_f2(), ring_zero(), {0, 0}, "collapse"); }
inline RingMorphism morphism_f4_frobenius() {
    RingTable f4 = ring_f4();
    std::vector<int> sq(4);
    for (int i = 0; i < 4; ++i) sq[i] = f4.m(i, i);
    return make_ring_morphism(f4, ring_f4(), sq, "frobenius");
}

// ---------------------------------------------------------------------------
// Named adjunctions.

struct NamedAdjunction {
    std::string name;
    Adjunction adj;
};

inline Adjunction identity_adjunction(const Cat& c) {
    Fn id = identity_functor(c);
    return validate_adjunction(id, id, identity_nat(id), identity_nat(id));
}

// 𝟙 ⇄ E♮ with left adjoint ∗ ↦ (∗,e); the minimal semiseparable-not-separable
// right adjoint.
inline Adjunction adj_one_env_e() {
    Cat env = karoubi(walking_idempotent()).env;
    Cat one = terminal();
    std::vector<ObjId> go(env->n_obj(), 0);
    std::vector<MorId> gm(env->n_mor(), 0);
    Fn g = make_functor(env, one, std::move(go), std::move(gm), "G");
    auto r = find_left_adjoint(g);
    if (!r.adjunction) throw internal_error("adj_one_env_e: no left adjoint");
    return *r.adjunction;
}

// 𝟙 ⇄ 2 through the initial object.
inline Adjunction adj_arrow_initial() {
    Cat two = walking_arrow();
    Cat one = terminal();
    Fn g = make_functor(two, one, {0, 0}, std::vector<MorId>(two->n_mor(), 0), "G");
    auto r = find_left_adjoint(g);
    if (!r.adjunction) throw internal_error("adj_arrow_initial: no left adjoint");
    return *r.adjunction;
}

// 2 ⇄ 𝟙 with fully faithful right adjoint picking the terminal object.
inline Adjunction adj_arrow_reflection() {
    Cat two = walking_arrow();
    Cat one = terminal();
    Fn f = make_functor(two, one, {0, 0}, std::vector<MorId>(two->n_mor(), 0), "F");
    auto r = find_right_adjoint(f);
    if (!r.adjunction) throw internal_error("adj_arrow_reflection: no right adjoint");
    return *r.adjunction;
}

// Galois connection between the chain 0<1<2 and the chain 0<1.
inline Adjunction adj_chain3_galois() {
    Cat three = chain(3);
    Cat two = walking_arrow();
    std::vector<ObjId> go = {0, 1, 1};
    std::vector<MorId> gm(three->n_mor());
    for (MorId m = 0; m < three->n_mor(); ++m) {
        ObjId x = go[three->dom(m)], y = go[three->cod(m)];
        for (MorId h : two->hom(x, y)) gm[m] = h;
    }
    Fn g = make_functor(three, two, std::move(go), std::move(gm), "G");
    auto r = find_left_adjoint(g);
    if (!r.adjunction) throw internal_error("adj_chain3_galois: no left adjoint");
    return *r.adjunction;
}

// Induction ⊣ restriction for φ : 𝔽₂ → 0 at rank 1.  The left adjoint is
// semiseparable with associated idempotent the zero maps.
inline Adjunction adj_module_zero() {
    RingMorphism phi = morphism_f2_to_zero();
    ModuleCat src = free_module_cat(phi.source, 1);
    ModuleCat tgt = free_module_cat(phi.target, 1);
    Fn g = restriction_functor(phi, {}, tgt, src);  // empty basis: 0 is free of rank 0
    auto r = find_left_adjoint(g);
    if (!r.adjunction) throw internal_error("adj_module_zero: no left adjoint");
    return *r.adjunction;
}

// Induction ⊣ restriction for the Frobenius automorphism of 𝔽₄ at rank 1.
inline Adjunction adj_frobenius_f4() {
    RingMorphism phi = morphism_f4_frobenius();
    ModuleCat src = free_module_cat(phi.target, 1);
    ModuleCat tgt = free_module_cat(phi.source, 1);
    Fn g = restriction_functor(phi, {phi.target.one}, src, tgt);
    auto r = find_left_adjoint(g);
    if (!r.adjunction) throw internal_error("adj_frobenius_f4: no left adjoint");
    return *r.adjunction;
}

// The conjugation monad on S₃: T = conj_r, m = r², η = r.  A non-identity
// monad with non-trivial carrier; separable like every monad on these
// desk-scale categories (σ = r is the unique natural candidate and works).
inline Monad s3_conjugation_monad() {
    Cat s3 = monoid_s3();
    const MorId r = 1, rr = 2;
    std::vector<MorId> tm(s3->n_mor());
    for (MorId f = 0; f < s3->n_mor(); ++f) tm[f] = s3->comp(r, s3->comp(f, rr));  // g f g⁻¹
    Fn t = make_functor(s3, s3, {0}, std::move(tm), "conj");
    Nat mult = make_nat(compose_fn(t, t), t, {rr});
    Nat unit = make_nat(identity_functor(s3), t, {r});
    return validate_monad(std::move(t), std::move(mult), std::move(unit));
}

// ---------------------------------------------------------------------------
// The suite: every gallery category within the size filter, plus every
// gallery adjunction.

struct NamedCat {
    std::string name;
    Cat cat;
};

inline std::vector<NamedCat> all_categories() {
    std::vector<NamedCat> out;
    auto add = [&](const std::string& n, Cat c) { out.push_back({n, std::move(c)}); };
    add("terminal", terminal());
    add("walking_idempotent", walking_idempotent());
    add("walking_arrow", walking_arrow());
    add("chain3", chain(3));
    add("discrete2", discrete(2));
    add("indiscrete2", indiscrete(2));
    add("monoid_z2", monoid_z2());
    add("monoid_z3", monoid_z3());
    add("monoid_s3", monoid_s3());
    add("monoid_idem", monoid_idem());
    add("monoid_t2", monoid_t2());
    add("diamond", diamond());
    add("env_e", karoubi(walking_idempotent()).env);
    add("product_e_2", product_cat(walking_idempotent(), walking_arrow()));
    add("mod_f2_r1", free_module_cat(ring_f2(), 1).cat);
    add("mod_f2_r2", free_module_cat(ring_f2(), 2).cat);
    add("mod_f2x2_r1", free_module_cat(ring_f2x2(), 1).cat);
    add("mod_f4_r1", free_module_cat(ring_f4(), 1).cat);
    add("mod_f2x_r1", free_module_cat(ring_f2x(), 1).cat);
    add("mod_zero_r1", free_module_cat(ring_zero(), 1).cat);
    return out;
}

inline std::vector<NamedCat> suite_categories(int max_obj = 6, int max_mor = 64) {
    std::vector<NamedCat> out;
    for (auto& nc : all_categories())
        if (nc.cat->n_obj() <= max_obj && nc.cat->n_mor() <= max_mor) out.push_back(nc);
    return out;
}

inline std::vector<NamedAdjunction> all_adjunctions() {
    std::vector<NamedAdjunction> out;
    out.push_back({"id_terminal", identity_adjunction(terminal())});
    out.push_back({"id_walking_idempotent", identity_adjunction(walking_idempotent())});
    out.push_back({"id_monoid_z2", identity_adjunction(monoid_z2())});
    out.push_back({"one_env_e", adj_one_env_e()});
    out.push_back({"arrow_initial", adj_arrow_initial()});
    out.push_back({"arrow_reflection", adj_arrow_reflection()});
    out.push_back({"chain3_galois", adj_chain3_galois()});
    out.push_back({"module_zero", adj_module_zero()});
    out.push_back({"frobenius_f4", adj_frobenius_f4()});
    return out;
}

}  // namespace fincat::gallery
