#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fincat/retraction.hpp"

namespace fincat {

// ---------------------------------------------------------------------------
// Hom-set level predicates

struct MorPairWitness {
    MorId f = kNoMor, g = kNoMor;
};

inline bool is_faithful(const Fn& f, MorPairWitness* w = nullptr) {
    const Cat& c = f.source;
    for (ObjId x = 0; x < c->n_obj(); ++x)
        for (ObjId y = 0; y < c->n_obj(); ++y) {
            const auto& hs = c->hom(x, y);
            for (size_t i = 0; i < hs.size(); ++i)
                for (size_t j = i + 1; j < hs.size(); ++j)
                    if (f.mor(hs[i]) == f.mor(hs[j])) {
                        if (w) *w = {hs[i], hs[j]};
                        return false;
                    }
        }
    return true;
}

inline bool is_full(const Fn& f, MorId* missed = nullptr) {
    const Cat& c = f.source;
    const Cat& d = f.target;
    for (ObjId x = 0; x < c->n_obj(); ++x)
        for (ObjId y = 0; y < c->n_obj(); ++y)
            for (MorId h : d->hom(f.obj(x), f.obj(y))) {
                bool hit = false;
                for (MorId m : c->hom(x, y))
                    if (f.mor(m) == h) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    if (missed) *missed = h;
                    return false;
                }
            }
    return true;
}

inline bool is_fully_faithful(const Fn& f) { return is_faithful(f) && is_full(f); }

inline bool is_split_mono(const Cat& c, MorId i) {
    for (MorId r : c->hom(c->cod(i), c->dom(i)))
        if (c->comp(r, i) == c->id(c->dom(i))) return true;
    return false;
}

inline bool is_split_epi(const Cat& c, MorId p) {
    for (MorId s : c->hom(c->cod(p), c->dom(p)))
        if (c->comp(p, s) == c->id(c->cod(p))) return true;
    return false;
}

inline bool is_maschke(const Fn& f, MorId* witness = nullptr) {
    for (MorId m = 0; m < f.source->n_mor(); ++m)
        if (is_split_mono(f.target, f.mor(m)) && !is_split_mono(f.source, m)) {
            if (witness) *witness = m;
            return false;
        }
    return true;
}

inline bool is_dual_maschke(const Fn& f, MorId* witness = nullptr) {
    for (MorId m = 0; m < f.source->n_mor(); ++m)
        if (is_split_epi(f.target, f.mor(m)) && !is_split_epi(f.source, m)) {
            if (witness) *witness = m;
            return false;
        }
    return true;
}

inline bool is_conservative(const Fn& f, MorId* witness = nullptr) {
    for (MorId m = 0; m < f.source->n_mor(); ++m)
        if (f.target->is_iso(f.mor(m)) && !f.source->is_iso(m)) {
            if (witness) *witness = m;
            return false;
        }
    return true;
}

// One retract assignment (C, i: D → FC, p: FC → D) with p∘i = Id_D.
struct RetractOf {
    ObjId through = -1;  // object C of the source
    MorId in = kNoMor;   // i : D → FC
    MorId out = kNoMor;  // p : FC → D
};

inline bool is_surjective_utr(const Fn& f, std::vector<RetractOf>* data = nullptr, ObjId* failed = nullptr) {
    const Cat& d = f.target;
    std::vector<RetractOf> found;
    for (ObjId t = 0; t < d->n_obj(); ++t) {
        RetractOf r;
        for (ObjId c = 0; c < f.source->n_obj() && r.through < 0; ++c)
            for (MorId i : d->hom(t, f.obj(c))) {
                for (MorId p : d->hom(f.obj(c), t))
                    if (d->comp(p, i) == d->id(t)) {
                        r = {c, i, p};
                        break;
                    }
                if (r.through >= 0) break;
            }
        if (r.through < 0) {
            if (failed) *failed = t;
            return false;
        }
        found.push_back(r);
    }
    if (data) *data = std::move(found);
    return true;
}

// ---------------------------------------------------------------------------
// The 𝒫-search.  Variables are the single values 𝒫_{X,Y}(h); assignments are
// explored in canonical order (pairs lexicographic, h by id, values by id), so
// the first solution is the canonical-first one and enumeration is
// lexicographic.  Assigning a value propagates every naturality image
// 𝒫(Fb∘h∘Fa) := b∘𝒫(h)∘a immediately; a clash is a dead branch.
class RetractionSearch {
public:
    RetractionSearch(const Fn& f, RetractionMode mode, int64_t node_limit = Budget::current().max_search_nodes)
        : f_(f), mode_(mode), nodes_(node_limit) {
        const Cat& c = f.source;
        const Cat& d = f.target;
        const int n = c->n_obj();
        offsets_.assign(static_cast<size_t>(n) * n + 1, 0);
        for (ObjId x = 0; x < n; ++x)
            for (ObjId y = 0; y < n; ++y) {
                size_t p = static_cast<size_t>(x) * n + y;
                offsets_[p + 1] = offsets_[p] + static_cast<int>(d->hom(f.obj(x), f.obj(y)).size());
            }
        n_vars_ = offsets_.back();
        val_.assign(n_vars_, kNoMor);
        var_pair_.assign(n_vars_, 0);
        var_mor_.assign(n_vars_, kNoMor);
        for (ObjId x = 0; x < n; ++x)
            for (ObjId y = 0; y < n; ++y) {
                size_t p = static_cast<size_t>(x) * n + y;
                const auto& hs = d->hom(f.obj(x), f.obj(y));
                for (size_t k = 0; k < hs.size(); ++k) {
                    var_pair_[offsets_[p] + k] = static_cast<int>(p);
                    var_mor_[offsets_[p] + k] = hs[k];
                }
            }
        // per pair: which h lie in the image of ℱ_{X,Y}, and the forced value
        // a separability witness must take there
        image_info_.assign(n_vars_, kNoMor);
        image_clash_.assign(n_vars_, false);
        for (MorId m = 0; m < c->n_mor(); ++m) {
            int v = var_of(c->dom(m), c->cod(m), f.mor(m));
            if (image_info_[v] == kNoMor)
                image_info_[v] = m;
            else if (mode_ == RetractionMode::separable && image_info_[v] != m)
                image_clash_[v] = true;  // 𝒫ℱ = Id unsatisfiable: F identifies f ≠ g
        }
    }

    std::optional<HomRetraction> first() {
        auto sols = run(1);
        if (sols.empty()) return std::nullopt;
        return sols.front();
    }

    std::vector<HomRetraction> enumerate(size_t limit) { return run(limit); }

    int64_t nodes_visited() const { return nodes_.count(); }

private:
    int var_of(ObjId x, ObjId y, MorId h) const {
        size_t p = static_cast<size_t>(x) * f_.source->n_obj() + y;
        return offsets_[p] + f_.target->hom_pos(h);
    }

    bool admissible(int var, MorId v) const {
        switch (mode_) {
            case RetractionMode::separable:
                if (image_clash_[var]) return false;
                if (image_info_[var] != kNoMor) return v == image_info_[var];
                return true;
            case RetractionMode::naturally_full:
                return f_.mor(v) == var_mor_[var];
            case RetractionMode::semiseparable:
                if (image_info_[var] != kNoMor) return f_.mor(v) == var_mor_[var];
                return true;
        }
        return false;
    }

    // assign with propagation; returns false on clash, records undo trail
    bool assign(int var, MorId v, std::vector<int>& trail) {
        const Cat& c = f_.source;
        const Cat& d = f_.target;
        std::vector<std::pair<int, MorId>> queue{{var, v}};
        while (!queue.empty()) {
            auto [cur, value] = queue.back();
            queue.pop_back();
            if (val_[cur] == value) continue;
            if (val_[cur] != kNoMor || !admissible(cur, value)) return false;
            val_[cur] = value;
            trail.push_back(cur);
            ObjId x = var_pair_[cur] / c->n_obj(), y = var_pair_[cur] % c->n_obj();
            MorId h = var_mor_[cur];
            for (MorId a = 0; a < c->n_mor(); ++a) {
                if (c->cod(a) != x) continue;
                MorId ha = d->comp(h, f_.mor(a));
                MorId va = c->comp(value, a);
                for (MorId b = 0; b < c->n_mor(); ++b) {
                    if (c->dom(b) != y) continue;
                    int img = var_of(c->dom(a), c->cod(b), d->comp(f_.mor(b), ha));
                    MorId forced = c->comp(b, va);
                    if (val_[img] == forced) continue;
                    if (val_[img] != kNoMor) return false;
                    queue.push_back({img, forced});
                }
            }
        }
        return true;
    }

    std::vector<HomRetraction> run(size_t limit) {
        std::vector<HomRetraction> out;
        if (limit == 0) return out;
        dfs(0, limit, out);
        return out;
    }

    void dfs(int from, size_t limit, std::vector<HomRetraction>& out) {
        int var = from;
        while (var < n_vars_ && val_[var] != kNoMor) ++var;
        if (var == n_vars_) {
            out.push_back(extract());
            return;
        }
        ObjId x = var_pair_[var] / f_.source->n_obj(), y = var_pair_[var] % f_.source->n_obj();
        for (MorId v : f_.source->hom(x, y)) {
            if (!admissible(var, v)) continue;
            nodes_.tick("hom-retraction search");
            std::vector<int> trail;
            if (assign(var, v, trail)) dfs(var + 1, limit, out);
            for (int t : trail) val_[t] = kNoMor;
            if (out.size() >= limit) return;
        }
    }

    HomRetraction extract() const {
        const int n = f_.source->n_obj();
        HomRetraction p{f_, {}};
        p.maps.resize(static_cast<size_t>(n) * n);
        for (int v = 0; v < n_vars_; ++v) p.maps[var_pair_[v]].push_back(val_[v]);
        return p;
    }

    Fn f_;
    RetractionMode mode_;
    NodeCounter nodes_;
    std::vector<int> offsets_;
    int n_vars_ = 0;
    std::vector<MorId> val_;
    std::vector<int> var_pair_;
    std::vector<MorId> var_mor_;
    std::vector<MorId> image_info_;
    std::vector<char> image_clash_;
};

inline std::optional<HomRetraction> search_hom_retraction(const Fn& f, RetractionMode mode,
                                                          int64_t* nodes = nullptr) {
    RetractionSearch s(f, mode);
    auto r = s.first();
    if (nodes) *nodes = s.nodes_visited();
    if (r) {
        std::string why;
        if (!validate_hom_retraction(*r, mode, &why))
            throw internal_error(std::string("search returned an invalid witness: ") + why);
    }
    return r;
}

inline std::vector<HomRetraction> enumerate_hom_retractions(const Fn& f, RetractionMode mode, size_t limit) {
    return RetractionSearch(f, mode).enumerate(limit);
}

inline bool is_semiseparable(const Fn& f) { return search_hom_retraction(f, RetractionMode::semiseparable).has_value(); }
inline bool is_separable(const Fn& f) { return search_hom_retraction(f, RetractionMode::separable).has_value(); }
inline bool is_naturally_full(const Fn& f) { return search_hom_retraction(f, RetractionMode::naturally_full).has_value(); }

// ---------------------------------------------------------------------------

struct FunctorReport {
    bool faithful = false, full = false, fully_faithful = false;
    bool semiseparable = false, separable = false, naturally_full = false;
    bool maschke = false, dual_maschke = false, conservative = false;
    bool surjective_utr = false;
    std::optional<HomRetraction> semisep_witness;
    std::optional<Nat> idempotent;  // associated to the semiseparability witness
    std::vector<RetractOf> retracts;
    int64_t search_nodes = 0;
};

// Each flag is decided independently; the Prop-1.3-style implications between
// them are test subjects, not shortcuts taken here.
inline FunctorReport classify(const Fn& f) {
    FunctorReport r;
    r.faithful = is_faithful(f);
    r.full = is_full(f);
    r.fully_faithful = r.faithful && r.full;
    int64_t n1 = 0, n2 = 0, n3 = 0;
    r.semisep_witness = search_hom_retraction(f, RetractionMode::semiseparable, &n1);
    r.semiseparable = r.semisep_witness.has_value();
    r.separable = search_hom_retraction(f, RetractionMode::separable, &n2).has_value();
    r.naturally_full = search_hom_retraction(f, RetractionMode::naturally_full, &n3).has_value();
    r.search_nodes = n1 + n2 + n3;
    if (r.semisep_witness) r.idempotent = associated_idempotent(*r.semisep_witness);
    r.maschke = is_maschke(f);
    r.dual_maschke = is_dual_maschke(f);
    r.conservative = is_conservative(f);
    r.surjective_utr = is_surjective_utr(f, &r.retracts);
    return r;
}

// 𝒫^{GF} := 𝒫^F ∘ 𝒫^G, defined whenever the boundaries line up.
inline HomRetraction compose_retractions(const HomRetraction& pf, const HomRetraction& pg, const Fn& gf) {
    const Fn& f = pf.F;
    const int n = f.source->n_obj();
    HomRetraction out{gf, {}};
    out.maps.resize(static_cast<size_t>(n) * n);
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y)
            for (MorId h : gf.target->hom(gf.obj(x), gf.obj(y)))
                out.maps[static_cast<size_t>(x) * n + y].push_back(
                    pf.apply(x, y, pg.apply(f.obj(x), f.obj(y), h)));
    return out;
}

}  // namespace fincat
