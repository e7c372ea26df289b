#pragma once

// Shared fixtures for the test and acceptance suites: the functor corpus over
// the gallery, and brute-force oracles kept independent of the search code
// they check.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fincat/gallery.hpp"
#include "fincat/json_io.hpp"

namespace fixtures {

using namespace fincat;

inline Fn collapse_to_terminal(const Cat& c) {
    Cat one = gallery::terminal();
    return make_functor(c, one, std::vector<ObjId>(c->n_obj(), 0), std::vector<MorId>(c->n_mor(), 0), "!" + c->name);
}

struct NamedFn {
    std::string name;
    Fn fn;
};

// A deterministic corpus of functors over the gallery: identities, envelope
// inclusions, quotient functors for every idempotent natural transformation
// on a suite category, the adjunction halves, and the module functors at
// small rank bounds.
inline std::vector<NamedFn> suite_functors() {
    std::vector<NamedFn> out;
    auto cats = gallery::suite_categories();
    for (auto& nc : cats) {
        if (nc.cat->n_mor() <= 8) out.push_back({"id_" + nc.name, identity_functor(nc.cat)});
    }
    for (auto& nc : cats) {
        if (nc.cat->n_mor() > 31) continue;
        out.push_back({"iota_" + nc.name, karoubi(nc.cat).iota});
    }
    for (auto& nc : cats) {
        if (nc.cat->n_mor() > 31) continue;
        auto es = enumerate_idempotent_nats(nc.cat);
        for (size_t i = 0; i < es.size(); ++i)
            out.push_back({"H_" + nc.name + "_" + std::to_string(i), coidentifier(nc.cat, es[i]).H});
    }
    for (auto& na : gallery::all_adjunctions()) {
        out.push_back({"F_" + na.name, na.adj.F});
        out.push_back({"G_" + na.name, na.adj.G});
    }
    // a faithful non-full inclusion
    {
        Cat d2 = gallery::discrete(2), two = gallery::walking_arrow();
        std::vector<MorId> om = {two->id(0), two->id(1)};
        out.push_back({"discrete2_into_2", make_functor(d2, two, {0, 1}, om, "incl")});
    }
    // module functors for the gallery ring morphisms
    {
        auto phi = gallery::morphism_f2_diag_f2x2();
        ModuleCat r1 = free_module_cat(phi.source, 1), s1 = free_module_cat(phi.target, 1);
        ModuleCat r2 = free_module_cat(phi.source, 2);
        out.push_back({"ind_f2_f2x2_r1", induction_functor(phi, r1, s1).fn});
        out.push_back({"res_f2x2_r1", restriction_functor(phi, {1, 2}, s1, r2)});
    }
    {
        auto phi = gallery::morphism_f2_into_f4();
        ModuleCat r1 = free_module_cat(phi.source, 1), s1 = free_module_cat(phi.target, 1);
        ModuleCat r2 = free_module_cat(phi.source, 2);
        out.push_back({"ind_f2_f4_r1", induction_functor(phi, r1, s1).fn});
        out.push_back({"res_f4_r1", restriction_functor(phi, {1, 2}, s1, r2)});
    }
    {
        auto phi = gallery::morphism_f2_into_f2x();
        ModuleCat r1 = free_module_cat(phi.source, 1), s1 = free_module_cat(phi.target, 1);
        ModuleCat r2 = free_module_cat(phi.source, 2);
        out.push_back({"ind_f2_f2x_r1", induction_functor(phi, r1, s1).fn});
        out.push_back({"res_f2x_r1", restriction_functor(phi, {1, 2}, s1, r2)});
    }
    {
        auto phi = gallery::morphism_f2_to_zero();
        ModuleCat r1 = free_module_cat(phi.source, 1), s1 = free_module_cat(phi.target, 1);
        out.push_back({"ind_f2_zero_r1", induction_functor(phi, r1, s1).fn});
    }
    for (auto& nc : cats)
        if (nc.cat->n_mor() <= 8) out.push_back({"bang_" + nc.name, collapse_to_terminal(nc.cat)});
    return out;
}

inline std::vector<NamedFn> tiny_functors(int max_obj = 3, int max_hom = 3) {
    std::vector<NamedFn> out;
    for (auto& nf : suite_functors()) {
        const Cat& c = nf.fn.source;
        if (c->n_obj() > max_obj) continue;
        bool small = true;
        for (ObjId x = 0; x < c->n_obj() && small; ++x)
            for (ObjId y = 0; y < c->n_obj() && small; ++y)
                small = static_cast<int>(c->hom(x, y).size()) <= max_hom;
        if (small) out.push_back(nf);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle for the 𝒫-search: enumerate every family of hom-set maps
// outright and test the defining equations directly.  Deliberately naive and
// independent of the CSP implementation.

inline int64_t raw_candidate_count(const Fn& f, int64_t cap = 2'000'000) {
    int64_t total = 1;
    for (ObjId x = 0; x < f.source->n_obj(); ++x)
        for (ObjId y = 0; y < f.source->n_obj(); ++y) {
            int64_t dom = static_cast<int64_t>(f.source->hom(x, y).size());
            for (size_t k = 0; k < f.target->hom(f.obj(x), f.obj(y)).size(); ++k) {
                if (dom == 0) return 0;
                total *= dom;
                if (total > cap) return cap + 1;
            }
        }
    return total;
}

inline std::vector<HomRetraction> brute_force_retractions(const Fn& f, RetractionMode mode, size_t limit) {
    const Cat& c = f.source;
    const Cat& d = f.target;
    const int n = c->n_obj();
    // flatten variables in the same canonical order the CSP uses
    std::vector<std::pair<int, MorId>> vars;  // (pair, h)
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y)
            for (MorId h : d->hom(f.obj(x), f.obj(y))) vars.emplace_back(x * n + y, h);
    std::vector<HomRetraction> found;
    std::vector<MorId> val(vars.size());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (found.size() >= limit) return;
        if (i == vars.size()) {
            HomRetraction p{f, {}};
            p.maps.resize(static_cast<size_t>(n) * n);
            for (size_t k = 0; k < vars.size(); ++k) p.maps[vars[k].first].push_back(val[k]);
            if (retraction_is_natural(p) && retraction_satisfies_mode(p, mode)) found.push_back(p);
            return;
        }
        for (MorId v : c->hom(vars[i].first / n, vars[i].first % n)) {
            val[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return found;
}

// Brute-force σ enumeration for monad separability, independent of NatSearch.
inline bool brute_force_separable(const Monad& t) {
    const Cat& c = t.T.source;
    // σ_X ranges over Hom(TX, TTX)
    std::vector<std::vector<MorId>> doms(c->n_obj());
    for (ObjId x = 0; x < c->n_obj(); ++x) doms[x] = c->hom(t.T.obj(x), t.T.obj(t.T.obj(x)));
    std::vector<MorId> at(c->n_obj());
    std::function<bool(ObjId)> rec = [&](ObjId x) -> bool {
        if (x == c->n_obj()) {
            for (MorId m = 0; m < c->n_mor(); ++m) {
                ObjId a = c->dom(m), b = c->cod(m);
                if (c->comp(at[b], t.T.mor(m)) != c->comp(t.T.mor(t.T.mor(m)), at[a])) return false;
            }
            for (ObjId y = 0; y < c->n_obj(); ++y) {
                ObjId ty = t.T.obj(y);
                if (c->comp(t.mult.at[y], at[y]) != c->id(ty)) return false;
                MorId sm = c->comp(at[y], t.mult.at[y]);
                if (c->comp(t.T.mor(t.mult.at[y]), at[ty]) != sm) return false;
                if (c->comp(t.mult.at[ty], t.T.mor(at[y])) != sm) return false;
            }
            return true;
        }
        for (MorId v : doms[x]) {
            at[x] = v;
            if (rec(x + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

// All monads on a category, by exhaustive enumeration of endofunctors and
// structure maps.  Used to freeze the separable-monad landscape of the suite.
inline std::vector<Monad> enumerate_monads(const Cat& c, size_t limit = 10000) {
    std::vector<Fn> fns;
    std::vector<ObjId> oo(c->n_obj(), 0);
    std::function<void(std::vector<MorId>&, MorId)> dfs_mor = [&](std::vector<MorId>& om, MorId f) {
        if (f == c->n_mor()) {
            try {
                fns.push_back(make_functor(c, c, oo, om, "T"));
            } catch (const invalid_argument&) {
            }
            return;
        }
        if (om[f] != kNoMor) {
            dfs_mor(om, f + 1);
            return;
        }
        for (MorId cand : c->hom(oo[c->dom(f)], oo[c->cod(f)])) {
            om[f] = cand;
            bool ok = true;
            for (MorId g = 0; g < c->n_mor() && ok; ++g) {
                if (om[g] == kNoMor) continue;
                if (c->composable(g, f) && om[c->comp(g, f)] != kNoMor)
                    ok = ok && c->comp(om[g], om[f]) == om[c->comp(g, f)];
                if (ok && c->composable(f, g) && om[c->comp(f, g)] != kNoMor)
                    ok = ok && c->comp(om[f], om[g]) == om[c->comp(f, g)];
            }
            if (ok) dfs_mor(om, f + 1);
            om[f] = kNoMor;
        }
    };
    while (true) {
        std::vector<MorId> om(c->n_mor(), kNoMor);
        for (ObjId x = 0; x < c->n_obj(); ++x) om[c->id(x)] = c->id(oo[x]);
        dfs_mor(om, 0);
        int i = 0;
        for (; i < c->n_obj(); ++i) {
            if (++oo[i] < c->n_obj()) break;
            oo[i] = 0;
        }
        if (i == c->n_obj()) break;
    }
    std::vector<Monad> out;
    for (auto& t : fns) {
        NatSearch units(identity_functor(c), t);
        for (auto& eta : units.all(limit)) {
            NatSearch mults(compose_fn(t, t), t);
            mults.component_ok = [&](ObjId x, MorId cand) {
                return c->comp(cand, eta.at[t.obj(x)]) == c->id(t.obj(x)) &&
                       c->comp(cand, t.mor(eta.at[x])) == c->id(t.obj(x));
            };
            for (auto& m : mults.all(limit)) {
                try {
                    out.push_back(validate_monad(t, make_nat(compose_fn(t, t), t, m.at),
                                                 make_nat(identity_functor(c), t, eta.at)));
                } catch (const invalid_argument&) {
                }
            }
        }
    }
    return out;
}

}  // namespace fixtures
