#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/core.hpp"

namespace fincat {

// Functor or semifunctor: object and morphism maps preserving boundaries and
// composition.  A semifunctor need not preserve identities; whether this one
// does is recorded at construction time.
class Fn {
public:
    Cat source, target;
    std::vector<ObjId> on_obj;
    std::vector<MorId> on_mor;
    std::string name;

    ObjId obj(ObjId x) const { return on_obj[x]; }
    MorId mor(MorId f) const { return on_mor[f]; }
    bool is_functor() const { return preserves_identities_; }

    friend bool operator==(const Fn& a, const Fn& b) {
        return a.on_obj == b.on_obj && a.on_mor == b.on_mor && same_cat(a.source, b.source) &&
               same_cat(a.target, b.target);
    }

private:
    bool preserves_identities_ = false;
    friend Fn make_fn(Cat, Cat, std::vector<ObjId>, std::vector<MorId>, bool, std::string);
};

inline Fn make_fn(Cat source, Cat target, std::vector<ObjId> on_obj, std::vector<MorId> on_mor,
                  bool require_identities, std::string name) {
    if (static_cast<int>(on_obj.size()) != source->n_obj() || static_cast<int>(on_mor.size()) != source->n_mor())
        throw invalid_argument("functor tables have wrong length");
    for (ObjId x = 0; x < source->n_obj(); ++x)
        if (on_obj[x] < 0 || on_obj[x] >= target->n_obj()) throw invalid_argument("functor: dangling object");
    for (MorId f = 0; f < source->n_mor(); ++f) {
        MorId ff = on_mor[f];
        if (ff < 0 || ff >= target->n_mor()) throw invalid_argument("functor: dangling morphism");
        if (target->dom(ff) != on_obj[source->dom(f)] || target->cod(ff) != on_obj[source->cod(f)])
            throw invalid_argument("functor '" + name + "': boundary mismatch at " + source->morphisms[f].name);
    }
    for (MorId f = 0; f < source->n_mor(); ++f)
        for (MorId g = 0; g < source->n_mor(); ++g)
            if (source->composable(g, f) && target->comp(on_mor[g], on_mor[f]) != on_mor[source->comp(g, f)])
                throw invalid_argument("functor '" + name + "': does not preserve composition at " +
                                       source->morphisms[g].name + "∘" + source->morphisms[f].name);
    bool preserves_ids = true;
    for (ObjId x = 0; x < source->n_obj(); ++x)
        if (on_mor[source->id(x)] != target->id(on_obj[x])) preserves_ids = false;
    if (require_identities && !preserves_ids)
        throw invalid_argument("functor '" + name + "': does not preserve identities");
    Fn out;
    out.source = std::move(source);
    out.target = std::move(target);
    out.on_obj = std::move(on_obj);
    out.on_mor = std::move(on_mor);
    out.name = std::move(name);
    out.preserves_identities_ = preserves_ids;
    return out;
}

inline Fn make_functor(Cat source, Cat target, std::vector<ObjId> on_obj, std::vector<MorId> on_mor,
                       std::string name = "F") {
    return make_fn(std::move(source), std::move(target), std::move(on_obj), std::move(on_mor), true, std::move(name));
}

// F(Id_X) is idempotent automatically: F(Id)∘F(Id) = F(Id∘Id) = F(Id).
inline Fn make_semifunctor(Cat source, Cat target, std::vector<ObjId> on_obj, std::vector<MorId> on_mor,
                           std::string name = "F") {
    return make_fn(std::move(source), std::move(target), std::move(on_obj), std::move(on_mor), false, std::move(name));
}

inline Fn identity_functor(const Cat& c) {
    std::vector<ObjId> oo(c->n_obj());
    std::vector<MorId> om(c->n_mor());
    for (ObjId x = 0; x < c->n_obj(); ++x) oo[x] = x;
    for (MorId f = 0; f < c->n_mor(); ++f) om[f] = f;
    return make_functor(c, c, std::move(oo), std::move(om), "Id");
}

// G∘F.  A composite with a semifunctor factor is in general a semifunctor.
inline Fn compose_fn(const Fn& g, const Fn& f) {
    if (!same_cat(f.target, g.source)) throw invalid_argument("compose: boundary mismatch");
    std::vector<ObjId> oo(f.source->n_obj());
    std::vector<MorId> om(f.source->n_mor());
    for (ObjId x = 0; x < f.source->n_obj(); ++x) oo[x] = g.on_obj[f.on_obj[x]];
    for (MorId m = 0; m < f.source->n_mor(); ++m) om[m] = g.on_mor[f.on_mor[m]];
    return make_fn(f.source, g.target, std::move(oo), std::move(om), false, g.name + "∘" + f.name);
}

inline Fn opposite(const Fn& f, const Cat& src_op, const Cat& tgt_op) {
    return make_fn(src_op, tgt_op, f.on_obj, f.on_mor, false, f.name + "^op");
}

// Natural transformation between parallel (semi)functors.
class Nat {
public:
    Fn from, to;
    std::vector<MorId> at;  // component per source object, in the target category

    MorId operator()(ObjId x) const { return at[x]; }

    friend bool operator==(const Nat& a, const Nat& b) { return a.from == b.from && a.to == b.to && a.at == b.at; }
};

inline bool naturality_holds(const Fn& f, const Fn& g, const std::vector<MorId>& at) {
    const Cat& d = f.target;
    for (MorId m = 0; m < f.source->n_mor(); ++m) {
        ObjId a = f.source->dom(m), b = f.source->cod(m);
        if (d->comp(at[b], f.on_mor[m]) != d->comp(g.on_mor[m], at[a])) return false;
    }
    return true;
}

inline Nat make_nat(Fn from, Fn to, std::vector<MorId> at, bool check = true) {
    if (!same_cat(from.source, to.source) || !same_cat(from.target, to.target))
        throw invalid_argument("natural transformation: functor boundaries differ");
    if (static_cast<int>(at.size()) != from.source->n_obj())
        throw invalid_argument("natural transformation: wrong component count");
    const Cat& d = from.target;
    for (ObjId x = 0; x < from.source->n_obj(); ++x) {
        MorId c = at[x];
        if (c < 0 || c >= d->n_mor() || d->dom(c) != from.on_obj[x] || d->cod(c) != to.on_obj[x])
            throw invalid_argument("natural transformation: component at " + from.source->objects[x] +
                                   " has wrong boundary");
    }
    if (check && !naturality_holds(from, to, at)) throw invalid_argument("naturality fails");
    Nat n;
    n.from = std::move(from);
    n.to = std::move(to);
    n.at = std::move(at);
    return n;
}

// α_C ∘ F(Id_C) = α_C.  Holds automatically when either side is a functor.
inline bool is_seminatural(const Nat& a) {
    const Cat& d = a.from.target;
    for (ObjId x = 0; x < a.from.source->n_obj(); ++x)
        if (d->comp(a.at[x], a.from.on_mor[a.from.source->id(x)]) != a.at[x]) return false;
    return true;
}

inline Nat make_seminat(Fn from, Fn to, std::vector<MorId> at) {
    Nat n = make_nat(std::move(from), std::move(to), std::move(at));
    if (!is_seminatural(n)) throw invalid_argument("seminaturality fails");
    return n;
}

inline Nat identity_nat(const Fn& f) {
    std::vector<MorId> at(f.source->n_obj());
    for (ObjId x = 0; x < f.source->n_obj(); ++x) at[x] = f.target->id(f.on_obj[x]);
    return make_nat(f, f, std::move(at));
}

inline Nat nat_vertical(const Nat& beta, const Nat& alpha) {
    if (!(alpha.to == beta.from)) throw invalid_argument("vertical composite: boundary mismatch");
    std::vector<MorId> at(alpha.at.size());
    for (size_t x = 0; x < at.size(); ++x)
        at[x] = alpha.from.target->comp(beta.at[x], alpha.at[x]);
    return make_nat(alpha.from, beta.to, std::move(at));
}

// Fα : F∘from → F∘to
inline Nat nat_whisker_left(const Fn& f, const Nat& alpha) {
    std::vector<MorId> at(alpha.at.size());
    for (size_t x = 0; x < at.size(); ++x) at[x] = f.on_mor[alpha.at[x]];
    return make_nat(compose_fn(f, alpha.from), compose_fn(f, alpha.to), std::move(at), false);
}

// αF : from∘F → to∘F
inline Nat nat_whisker_right(const Nat& alpha, const Fn& f) {
    std::vector<MorId> at(f.source->n_obj());
    for (ObjId x = 0; x < f.source->n_obj(); ++x) at[x] = alpha.at[f.on_obj[x]];
    return make_nat(compose_fn(alpha.from, f), compose_fn(alpha.to, f), std::move(at), false);
}

inline Nat opposite(const Nat& a, const Fn& from_op, const Fn& to_op) {
    // α: F → G dualizes to α^op: G^op → F^op with the same component ids.
    return make_nat(from_op, to_op, a.at, false);
}

inline bool is_invertible_nat(const Nat& a) {
    for (MorId c : a.at)
        if (!a.from.target->is_iso(c)) return false;
    return true;
}

inline Nat invert_nat(const Nat& a) {
    std::vector<MorId> at(a.at.size());
    for (size_t x = 0; x < a.at.size(); ++x) {
        MorId inv = kNoMor;
        if (!a.from.target->is_iso(a.at[x], &inv)) throw invalid_argument("invert_nat: component not invertible");
        at[x] = inv;
    }
    return make_nat(a.to, a.from, std::move(at));
}

// (G·Id)_X := G(Id_X), the pointwise image of identities; for a semifunctor G
// this differs from the identity transformation of G.
inline Nat image_of_identities(const Fn& g) {
    std::vector<MorId> at(g.source->n_obj());
    for (ObjId x = 0; x < g.source->n_obj(); ++x) at[x] = g.on_mor[g.source->id(x)];
    return make_nat(g, g, std::move(at), false);
}

}  // namespace fincat
