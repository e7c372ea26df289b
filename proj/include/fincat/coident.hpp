#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fincat/classify.hpp"
#include "fincat/natsearch.hpp"

namespace fincat {

// The coidentifier C_e: same objects, morphisms are classes under
// f ∼ g  iff  e_cod∘f = e_cod∘g, represented by their least member.
struct Coidentifier {
    Cat base;
    Cat quotient;
    Fn H;                       // the quotient functor, naturally full
    Nat e;                      // the inducing idempotent
    std::vector<MorId> rep;     // per base morphism: least member of its class
    std::vector<MorId> cls;     // per base morphism: quotient morphism id
    HomRetraction nat_full_witness;  // 𝒫(f̄) = e_cod∘f
};

inline Coidentifier coidentifier(const Cat& c, const Nat& e) {
    if (!is_idempotent_nat(e) || !same_cat(e.from.source, c))
        throw invalid_argument("coidentifier: not an idempotent natural transformation on Id of this category");
    Coidentifier out;
    out.base = c;
    out.e = e;
    out.rep.assign(c->n_mor(), kNoMor);
    for (MorId f = 0; f < c->n_mor(); ++f) {
        for (MorId g : c->hom(c->dom(f), c->cod(f)))
            if (c->comp(e.at[c->cod(f)], g) == c->comp(e.at[c->cod(f)], f)) {
                out.rep[f] = g;  // hom-sets are listed in id order, first hit is least
                break;
            }
    }
    CatBuilder b(c->name.empty() ? "quot" : c->name + "_e");
    for (const auto& o : c->objects) b.add_object(o);
    out.cls.assign(c->n_mor(), kNoMor);
    std::vector<MorId> members;  // quotient morphism -> representative in base
    for (MorId f = 0; f < c->n_mor(); ++f) {
        if (out.rep[f] != f) continue;
        MorId q = b.add_morphism(c->morphisms[f].name + "~", c->dom(f), c->cod(f));
        members.push_back(f);
        out.cls[f] = q;
    }
    for (MorId f = 0; f < c->n_mor(); ++f) out.cls[f] = out.cls[out.rep[f]];
    for (ObjId x = 0; x < c->n_obj(); ++x) b.set_identity(x, out.cls[c->id(x)]);
    for (size_t q1 = 0; q1 < members.size(); ++q1)
        for (size_t q2 = 0; q2 < members.size(); ++q2) {
            MorId f = members[q1], g = members[q2];
            if (c->composable(g, f)) b.set_comp(static_cast<MorId>(q2), static_cast<MorId>(q1), out.cls[c->comp(g, f)]);
        }
    out.quotient = b.finish();

    // Composition must be independent of the chosen members; this follows
    // from naturality of e but is re-checked instead of assumed.
    for (MorId f = 0; f < c->n_mor(); ++f)
        for (MorId g = 0; g < c->n_mor(); ++g)
            if (c->composable(g, f) && out.cls[c->comp(g, f)] != out.cls[c->comp(out.rep[g], out.rep[f])])
                throw internal_error("coidentifier: composition is not well defined on classes");

    std::vector<ObjId> ho(c->n_obj());
    for (ObjId x = 0; x < c->n_obj(); ++x) ho[x] = x;
    out.H = make_functor(c, out.quotient, std::move(ho), out.cls, "H");

    // H is naturally full with 𝒫(f̄) = e_cod∘f, and its associated idempotent
    // is e itself.
    HomRetraction p{out.H, {}};
    p.maps.resize(static_cast<size_t>(c->n_obj()) * c->n_obj());
    for (ObjId x = 0; x < c->n_obj(); ++x)
        for (ObjId y = 0; y < c->n_obj(); ++y)
            for (MorId q : out.quotient->hom(x, y))
                p.maps[static_cast<size_t>(x) * c->n_obj() + y].push_back(c->comp(e.at[y], members[q]));
    std::string why;
    if (!validate_hom_retraction(p, RetractionMode::naturally_full, &why))
        throw internal_error("coidentifier: canonical witness rejected: " + why);
    if (!(associated_idempotent(p) == e)) throw internal_error("coidentifier: associated idempotent is not e");
    out.nat_full_witness = std::move(p);
    return out;
}

// All idempotent natural transformations Id_C → Id_C, canonical order.
inline std::vector<Nat> enumerate_idempotent_nats(const Cat& c, size_t limit = 10000) {
    Fn idc = identity_functor(c);
    NatSearch s(idc, idc);
    s.component_ok = [&](ObjId, MorId m) { return c->comp(m, m) == m; };
    return s.all(limit);
}

struct Factoring {
    std::optional<Fn> factored;       // F_e with F = F_e∘H
    std::optional<ObjId> obstruction; // object where (Fe)_X ≠ Id fails
};

// F factors through H iff Fe = Id_F; the factor acts as F on representatives.
inline Factoring factor_through_coidentifier(const Fn& f, const Coidentifier& co) {
    if (!same_cat(f.source, co.base)) throw invalid_argument("factor_through_coidentifier: wrong source");
    for (ObjId x = 0; x < co.base->n_obj(); ++x)
        if (f.mor(co.e.at[x]) != f.target->id(f.obj(x))) return {std::nullopt, x};
    const Cat& q = co.quotient;
    std::vector<ObjId> oo(q->n_obj());
    std::vector<MorId> om(q->n_mor(), kNoMor);
    for (ObjId x = 0; x < q->n_obj(); ++x) oo[x] = f.obj(x);
    for (MorId m = 0; m < co.base->n_mor(); ++m)
        if (co.rep[m] == m) om[co.cls[m]] = f.mor(m);
    Fn fe = make_fn(q, f.target, std::move(oo), std::move(om), f.is_functor(), f.name + "_e");
    if (!(compose_fn(fe, co.H) == f)) throw internal_error("factorization through the coidentifier is not exact");
    return {fe, std::nullopt};
}

// β_e with β = β_e H, for β : F → F′ where both factor through H.
inline Nat factor_nat(const Nat& beta, const Coidentifier& co, const Fn& fe, const Fn& fpe) {
    auto check = [&](const Fn& g) {
        for (ObjId x = 0; x < co.base->n_obj(); ++x)
            if (g.mor(co.e.at[x]) != g.target->id(g.obj(x)))
                throw invalid_argument("factor_nat: a functor does not satisfy Fe = Id");
    };
    check(beta.from);
    check(beta.to);
    return make_nat(fe, fpe, beta.at);  // objects of C_e are those of C
}

struct CanonicalFactorization {
    Nat e;
    Coidentifier coid;
    Fn factor;               // F_e, separable
    HomRetraction factor_witness;  // 𝒫^{F_e}_{HX,HY} = ℱ^H∘𝒫^F
};

inline CanonicalFactorization canonical_factorization(const Fn& f, const HomRetraction& p) {
    std::string why;
    if (!validate_hom_retraction(p, RetractionMode::semiseparable, &why))
        throw invalid_argument("canonical_factorization: witness invalid: " + why);
    CanonicalFactorization out{associated_idempotent(p), {}, {}, {}};
    out.coid = coidentifier(f.source, out.e);
    auto fact = factor_through_coidentifier(f, out.coid);
    if (!fact.factored) throw internal_error("canonical_factorization: Fe = Id fails for the associated idempotent");
    out.factor = *fact.factored;
    const Cat& c = f.source;
    HomRetraction pe{out.factor, {}};
    pe.maps.resize(static_cast<size_t>(c->n_obj()) * c->n_obj());
    for (ObjId x = 0; x < c->n_obj(); ++x)
        for (ObjId y = 0; y < c->n_obj(); ++y)
            for (MorId h : f.target->hom(f.obj(x), f.obj(y)))
                pe.maps[static_cast<size_t>(x) * c->n_obj() + y].push_back(out.coid.H.mor(p.apply(x, y, h)));
    if (!validate_hom_retraction(pe, RetractionMode::separable, &why))
        throw internal_error("canonical_factorization: F_e is not separable via the stated witness: " + why);
    out.factor_witness = std::move(pe);
    return out;
}

// For every idempotent h̄ of C_e, the idempotent q := e_C∘h in C with Hq = h̄.
inline std::vector<std::pair<MorId, MorId>> coidentifier_lifts_idempotents(const Coidentifier& co) {
    const Cat& q = co.quotient;
    const Cat& c = co.base;
    std::vector<MorId> members(q->n_mor());
    for (MorId m = 0; m < c->n_mor(); ++m)
        if (co.rep[m] == m) members[co.cls[m]] = m;
    std::vector<std::pair<MorId, MorId>> out;
    for (ObjId x = 0; x < q->n_obj(); ++x)
        for (MorId hbar : idempotents_on(q, x)) {
            MorId lift = c->comp(co.e.at[x], members[hbar]);
            if (!c->is_idempotent(lift) || co.H.mor(lift) != hbar)
                throw internal_error("coidentifier: idempotent lift failed");
            out.emplace_back(hbar, lift);
        }
    return out;
}

}  // namespace fincat
