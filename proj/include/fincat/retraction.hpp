#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fincat/fn.hpp"

namespace fincat {

enum class RetractionMode { semiseparable, separable, naturally_full };

inline const char* mode_name(RetractionMode m) {
    switch (m) {
        case RetractionMode::semiseparable: return "semiseparable";
        case RetractionMode::separable: return "separable";
        default: return "naturally_full";
    }
}

// A natural family 𝒫_{X,Y} : Hom(FX,FY) → Hom(X,Y), contravariant in the
// first slot and covariant in the second.
struct HomRetraction {
    Fn F;
    // maps[X*n+Y][k] = image of the k-th element of hom(FX,FY)
    std::vector<std::vector<MorId>> maps;

    MorId apply(ObjId x, ObjId y, MorId h) const {
        return maps[static_cast<size_t>(x) * F.source->n_obj() + y][F.target->hom_pos(h)];
    }

    friend bool operator==(const HomRetraction& a, const HomRetraction& b) {
        return a.F == b.F && a.maps == b.maps;
    }
};

// Two-variable naturality: 𝒫(Fb∘h∘Fa) = b∘𝒫(h)∘a for all a: X′→X, b: Y→Y′.
inline bool retraction_is_natural(const HomRetraction& p, std::string* why = nullptr) {
    const Cat& c = p.F.source;
    const Cat& d = p.F.target;
    for (MorId a = 0; a < c->n_mor(); ++a)
        for (MorId b = 0; b < c->n_mor(); ++b) {
            ObjId x = c->cod(a), y = c->dom(b);
            for (MorId h : d->hom(p.F.obj(x), p.F.obj(y))) {
                MorId lhs = p.apply(c->dom(a), c->cod(b), d->comp(p.F.mor(b), d->comp(h, p.F.mor(a))));
                MorId rhs = c->comp(b, c->comp(p.apply(x, y, h), a));
                if (lhs != rhs) {
                    if (why)
                        *why = "naturality fails at a=" + c->morphisms[a].name + ", b=" + c->morphisms[b].name +
                               ", h=" + d->morphisms[h].name;
                    return false;
                }
            }
        }
    return true;
}

inline bool retraction_satisfies_mode(const HomRetraction& p, RetractionMode mode) {
    const Cat& c = p.F.source;
    const Cat& d = p.F.target;
    switch (mode) {
        case RetractionMode::separable:
            for (MorId f = 0; f < c->n_mor(); ++f)
                if (p.apply(c->dom(f), c->cod(f), p.F.mor(f)) != f) return false;
            return true;
        case RetractionMode::naturally_full:
            for (ObjId x = 0; x < c->n_obj(); ++x)
                for (ObjId y = 0; y < c->n_obj(); ++y)
                    for (MorId h : d->hom(p.F.obj(x), p.F.obj(y)))
                        if (p.F.mor(p.apply(x, y, h)) != h) return false;
            return true;
        case RetractionMode::semiseparable:
            for (MorId f = 0; f < c->n_mor(); ++f)
                if (p.F.mor(p.apply(c->dom(f), c->cod(f), p.F.mor(f))) != p.F.mor(f)) return false;
            return true;
    }
    return false;
}

inline bool validate_hom_retraction(const HomRetraction& p, RetractionMode mode, std::string* why = nullptr) {
    const int n = p.F.source->n_obj();
    if (static_cast<int>(p.maps.size()) != n * n) {
        if (why) *why = "wrong pair count";
        return false;
    }
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y) {
            const auto& hs = p.F.target->hom(p.F.obj(x), p.F.obj(y));
            const auto& row = p.maps[static_cast<size_t>(x) * n + y];
            if (row.size() != hs.size()) {
                if (why) *why = "wrong hom-set size at some pair";
                return false;
            }
            for (MorId v : row)
                if (v < 0 || v >= p.F.source->n_mor() || p.F.source->dom(v) != x || p.F.source->cod(v) != y) {
                    if (why) *why = "value outside the requested hom-set";
                    return false;
                }
        }
    if (!retraction_is_natural(p, why)) return false;
    if (!retraction_satisfies_mode(p, mode)) {
        if (why) *why = std::string("the ") + mode_name(mode) + " equation fails";
        return false;
    }
    return true;
}

// e_X := 𝒫_{X,X}(Id_{FX}) for a semiseparability witness 𝒫.  The result is
// the unique idempotent natural e : Id → Id with Fe = Id_F; both that and the
// universal property (Ff = Fg iff e∘f = e∘g) are re-checked here.
inline Nat associated_idempotent(const HomRetraction& p) {
    const Cat& c = p.F.source;
    std::string why;
    if (!validate_hom_retraction(p, RetractionMode::semiseparable, &why))
        throw invalid_argument("associated_idempotent: witness invalid: " + why);
    std::vector<MorId> at(c->n_obj());
    for (ObjId x = 0; x < c->n_obj(); ++x) at[x] = p.apply(x, x, p.F.target->id(p.F.obj(x)));
    Fn idc = identity_functor(c);
    Nat e = make_nat(idc, idc, std::move(at));
    for (ObjId x = 0; x < c->n_obj(); ++x) {
        if (!c->is_idempotent(e.at[x])) throw internal_error("associated transformation is not idempotent");
        if (p.F.mor(e.at[x]) != p.F.target->id(p.F.obj(x)))
            throw internal_error("associated idempotent: Fe = Id_F fails");
    }
    for (MorId f = 0; f < c->n_mor(); ++f)
        for (MorId g : c->hom(c->dom(f), c->cod(f))) {
            bool img_eq = p.F.mor(f) == p.F.mor(g);
            bool dom_eq = c->comp(e.at[c->cod(f)], f) == c->comp(e.at[c->cod(f)], g);
            if (img_eq != dom_eq) throw internal_error("associated idempotent: universal property fails");
        }
    return e;
}

inline bool is_idempotent_nat(const Nat& e) {
    const Cat& c = e.from.source;
    if (!(e.from == e.to) || !(e.from == identity_functor(c))) return false;
    for (MorId m : e.at)
        if (!c->is_idempotent(m)) return false;
    return true;
}

}  // namespace fincat
