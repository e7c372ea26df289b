#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "fincat/adjoint.hpp"
#include "fincat/classify.hpp"
#include "fincat/coident.hpp"
#include "fincat/monadics.hpp"

namespace fincat {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Categories.  Schema: {objects:[string], morphisms:[{name,dom,cod}],
// identities:{obj:mor}, composition:[[g,f,gf],...]} with names resolved in
// file order; the composition list names every composable pair exactly once.

struct ParsedCategory {
    Cat cat;
    std::vector<Diagnostic> diagnostics;  // law violations; cat is null then
};

inline ParsedCategory parse_category(const json& j) {
    ParsedCategory out;
    if (!j.is_object() || !j.contains("objects") || !j.contains("morphisms"))
        throw invalid_argument("category: expected objects/morphisms");
    CatBuilder b(j.value("name", ""));
    std::map<std::string, ObjId> objs;
    std::map<std::string, MorId> mors;
    for (const auto& o : j.at("objects")) {
        std::string n = o.get<std::string>();
        if (objs.count(n)) {
            out.diagnostics.push_back({"DuplicateName", "object " + n});
            return out;
        }
        objs[n] = b.add_object(n);
    }
    auto obj_of = [&](const std::string& n) -> ObjId {
        auto it = objs.find(n);
        if (it == objs.end()) throw invalid_argument("category: unknown object " + n);
        return it->second;
    };
    for (const auto& m : j.at("morphisms")) {
        std::string n = m.at("name").get<std::string>();
        if (mors.count(n)) {
            out.diagnostics.push_back({"DuplicateName", "morphism " + n});
            return out;
        }
        std::string dn = m.at("dom").get<std::string>(), cn = m.at("cod").get<std::string>();
        if (!objs.count(dn) || !objs.count(cn)) {
            out.diagnostics.push_back({"DanglingReference", "morphism " + n});
            return out;
        }
        mors[n] = b.add_morphism(n, obj_of(dn), obj_of(cn));
    }
    auto mor_of = [&](const std::string& n) -> MorId {
        auto it = mors.find(n);
        if (it == mors.end()) throw invalid_argument("category: unknown morphism " + n);
        return it->second;
    };
    for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it) {
        if (!objs.count(it.key()) || !mors.count(it.value().get<std::string>())) {
            out.diagnostics.push_back({"DanglingReference", "identity of " + it.key()});
            return out;
        }
        b.set_identity(obj_of(it.key()), mor_of(it.value().get<std::string>()));
    }
    for (const auto& row : j.value("composition", json::array())) {
        if (!row.is_array() || row.size() != 3) {
            out.diagnostics.push_back({"BadComposite", "composition rows must be [g,f,gf]"});
            return out;
        }
        std::string gn = row[0].get<std::string>(), fn = row[1].get<std::string>(), gfn = row[2].get<std::string>();
        if (!mors.count(gn) || !mors.count(fn) || !mors.count(gfn)) {
            out.diagnostics.push_back({"DanglingReference", gn + "∘" + fn});
            return out;
        }
        if (b.get_comp(mor_of(gn), mor_of(fn)) != kNoMor) {
            out.diagnostics.push_back({"BadComposite", "duplicate entry for " + gn + "∘" + fn});
            return out;
        }
        b.set_comp(mor_of(gn), mor_of(fn), mor_of(gfn));
    }
    out.diagnostics = b.try_finish(out.cat);
    return out;
}

inline json serialize_category(const Cat& c) {
    json j;
    if (!c->name.empty()) j["name"] = c->name;
    j["objects"] = json::array();
    for (const auto& o : c->objects) j["objects"].push_back(o);
    j["morphisms"] = json::array();
    for (const auto& m : c->morphisms)
        j["morphisms"].push_back({{"name", m.name}, {"dom", c->objects[m.dom]}, {"cod", c->objects[m.cod]}});
    j["identities"] = json::object();
    for (ObjId x = 0; x < c->n_obj(); ++x) j["identities"][c->objects[x]] = c->morphisms[c->id(x)].name;
    j["composition"] = json::array();
    for (MorId g = 0; g < c->n_mor(); ++g)
        for (MorId f = 0; f < c->n_mor(); ++f)
            if (c->composable(g, f))
                j["composition"].push_back(
                    {c->morphisms[g].name, c->morphisms[f].name, c->morphisms[c->comp(g, f)].name});
    return j;
}

// ---------------------------------------------------------------------------
// Functors: {source, target, objects:{...}, morphisms:{...}}.

inline Fn parse_fn(const json& j, bool require_identities) {
    auto src = parse_category(j.at("source"));
    auto tgt = parse_category(j.at("target"));
    if (!src.diagnostics.empty() || !tgt.diagnostics.empty())
        throw invalid_argument("functor: source or target category is invalid");
    std::vector<ObjId> oo(src.cat->n_obj(), -1);
    std::vector<MorId> om(src.cat->n_mor(), kNoMor);
    auto find_obj = [](const Cat& c, const std::string& n) -> ObjId {
        for (ObjId x = 0; x < c->n_obj(); ++x)
            if (c->objects[x] == n) return x;
        throw invalid_argument("functor: unknown object " + n);
    };
    auto find_mor = [](const Cat& c, const std::string& n) -> MorId {
        for (MorId f = 0; f < c->n_mor(); ++f)
            if (c->morphisms[f].name == n) return f;
        throw invalid_argument("functor: unknown morphism " + n);
    };
    for (auto it = j.at("objects").begin(); it != j.at("objects").end(); ++it)
        oo[find_obj(src.cat, it.key())] = find_obj(tgt.cat, it.value().get<std::string>());
    for (auto it = j.at("morphisms").begin(); it != j.at("morphisms").end(); ++it)
        om[find_mor(src.cat, it.key())] = find_mor(tgt.cat, it.value().get<std::string>());
    return make_fn(src.cat, tgt.cat, std::move(oo), std::move(om), require_identities, j.value("name", "F"));
}

inline Fn parse_functor(const json& j) { return parse_fn(j, true); }

inline json serialize_fn(const Fn& f) {
    json j;
    if (!f.name.empty()) j["name"] = f.name;
    j["source"] = serialize_category(f.source);
    j["target"] = serialize_category(f.target);
    j["objects"] = json::object();
    for (ObjId x = 0; x < f.source->n_obj(); ++x)
        j["objects"][f.source->objects[x]] = f.target->objects[f.obj(x)];
    j["morphisms"] = json::object();
    for (MorId m = 0; m < f.source->n_mor(); ++m)
        j["morphisms"][f.source->morphisms[m].name] = f.target->morphisms[f.mor(m)].name;
    return j;
}

// ---------------------------------------------------------------------------
// Transformations: {from, to, components:{obj:mor}}; from/to may be omitted
// when the context supplies the functors (e.g. an idempotent on Id).

inline json serialize_components(const Nat& a) {
    json c = json::object();
    for (ObjId x = 0; x < a.from.source->n_obj(); ++x)
        c[a.from.source->objects[x]] = a.from.target->morphisms[a.at[x]].name;
    return c;
}

inline json serialize_nat(const Nat& a) {
    json j;
    j["from"] = serialize_fn(a.from);
    j["to"] = serialize_fn(a.to);
    j["components"] = serialize_components(a);
    return j;
}

inline std::vector<MorId> parse_components(const json& j, const Cat& src, const Cat& tgt) {
    std::vector<MorId> at(src->n_obj(), kNoMor);
    for (auto it = j.begin(); it != j.end(); ++it) {
        ObjId x = -1;
        for (ObjId o = 0; o < src->n_obj(); ++o)
            if (src->objects[o] == it.key()) x = o;
        if (x < 0) throw invalid_argument("transformation: unknown object " + it.key());
        for (MorId m = 0; m < tgt->n_mor(); ++m)
            if (tgt->morphisms[m].name == it.value().get<std::string>()) at[x] = m;
        if (at[x] == kNoMor) throw invalid_argument("transformation: unknown morphism " + it.value().get<std::string>());
    }
    return at;
}

inline Nat parse_nat(const json& j) {
    Fn from = parse_fn(j.at("from"), false);
    Fn to = parse_fn(j.at("to"), false);
    return make_nat(from, to, parse_components(j.at("components"), from.source, from.target));
}

// An idempotent natural transformation Id_C → Id_C given by components only.
inline Nat parse_idempotent_on(const json& j, const Cat& c) {
    const json& comps = j.contains("components") ? j.at("components") : j;
    Fn id = identity_functor(c);
    Nat e = make_nat(id, id, parse_components(comps, c, c));
    if (!is_idempotent_nat(e)) throw invalid_argument("NotIdempotentNat: some component is not idempotent");
    return e;
}

// ---------------------------------------------------------------------------
// Adjunctions: {F, G, unit:{components}, counit:{components}}.

inline Adjunction parse_adjunction(const json& j) {
    Fn f = parse_functor(j.at("F"));
    Fn g = parse_functor(j.at("G"));
    if (!same_cat(f.target, g.source) || !same_cat(g.target, f.source))
        throw invalid_argument("adjunction: F and G boundaries do not match");
    auto comps = [&](const json& t) { return t.contains("components") ? t.at("components") : t; };
    Nat unit = make_nat(identity_functor(f.source), compose_fn(g, f),
                        parse_components(comps(j.at("unit")), f.source, f.source));
    Nat counit = make_nat(compose_fn(f, g), identity_functor(g.source),
                          parse_components(comps(j.at("counit")), g.source, g.source));
    return validate_adjunction(std::move(f), std::move(g), std::move(unit), std::move(counit));
}

inline json serialize_adjunction(const Adjunction& a) {
    json j;
    j["F"] = serialize_fn(a.F);
    j["G"] = serialize_fn(a.G);
    j["unit"] = {{"components", serialize_components(a.unit)}};
    j["counit"] = {{"components", serialize_components(a.counit)}};
    return j;
}

// ---------------------------------------------------------------------------
// Reports.  Canonical serializations carry no wall-clock data so repeated
// runs are byte-identical.

inline json serialize_retraction(const HomRetraction& p) {
    const Cat& c = p.F.source;
    const Cat& d = p.F.target;
    json pairs = json::array();
    for (ObjId x = 0; x < c->n_obj(); ++x)
        for (ObjId y = 0; y < c->n_obj(); ++y) {
            json map = json::object();
            for (MorId h : d->hom(p.F.obj(x), p.F.obj(y)))
                map[d->morphisms[h].name] = c->morphisms[p.apply(x, y, h)].name;
            pairs.push_back({{"from", c->objects[x]}, {"to", c->objects[y]}, {"map", map}});
        }
    return {{"pairs", pairs}};
}

inline json serialize_functor_report(const Fn& f, const FunctorReport& r) {
    json j;
    j["functor"] = f.name;
    j["faithful"] = r.faithful;
    j["full"] = r.full;
    j["fully_faithful"] = r.fully_faithful;
    j["semiseparable"] = r.semiseparable;
    j["separable"] = r.separable;
    j["naturally_full"] = r.naturally_full;
    j["maschke"] = r.maschke;
    j["dual_maschke"] = r.dual_maschke;
    j["conservative"] = r.conservative;
    j["surjective_up_to_retracts"] = r.surjective_utr;
    j["search_nodes"] = r.search_nodes;
    if (r.semisep_witness) j["semiseparability_witness"] = serialize_retraction(*r.semisep_witness);
    if (r.idempotent) j["associated_idempotent"] = serialize_components(*r.idempotent);
    if (r.surjective_utr) {
        json rs = json::array();
        const Cat& d = f.target;
        for (ObjId t = 0; t < d->n_obj(); ++t)
            rs.push_back({{"object", d->objects[t]},
                          {"retract_of", f.source->objects[r.retracts[t].through]},
                          {"in", d->morphisms[r.retracts[t].in].name},
                          {"out", d->morphisms[r.retracts[t].out].name}});
        j["retracts"] = rs;
    }
    return j;
}

inline json serialize_theorem_report(const TheoremReport& r) {
    json clauses = json::array();
    for (const auto& c : r.clauses) {
        json jc;
        jc["id"] = c.id;
        jc["kind"] = c.kind;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        jc["pass"] = c.pass;
        jc["budget_exceeded"] = c.budget_exceeded;
        if (!c.note.empty()) jc["note"] = c.note;
        clauses.push_back(jc);
    }
    return {{"clauses", clauses}, {"all_pass", r.all_pass}, {"budget_exceeded", r.any_budget}};
}

inline json diagnostics_json(const std::vector<Diagnostic>& ds) {
    json out = json::array();
    for (const auto& d : ds) out.push_back({{"code", d.code}, {"detail", d.detail}});
    return out;
}

}  // namespace fincat
