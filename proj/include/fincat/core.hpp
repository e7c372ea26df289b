#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincat/budget.hpp"

namespace fincat {

using ObjId = int32_t;
using MorId = int32_t;
constexpr MorId kNoMor = -1;

struct MorRec {
    std::string name;
    ObjId dom = 0;
    ObjId cod = 0;
};

struct Diagnostic {
    std::string code;    // DanglingReference, BadIdentity, MissingComposite,
                         // BadComposite, UnitLaw, NonAssociative
    std::string detail;
};

// A finite category as explicit tables.  Immutable once built; morphisms live
// in one arena with integer ids, hom-sets are derived views kept alongside.
class FinCat {
public:
    std::string name;
    std::vector<std::string> objects;
    std::vector<MorRec> morphisms;
    std::vector<MorId> identity;  // per object

    int n_obj() const { return static_cast<int>(objects.size()); }
    int n_mor() const { return static_cast<int>(morphisms.size()); }

    ObjId dom(MorId f) const { return morphisms[f].dom; }
    ObjId cod(MorId f) const { return morphisms[f].cod; }
    MorId id(ObjId x) const { return identity[x]; }

    bool composable(MorId g, MorId f) const { return dom(g) == cod(f); }

    // g∘f; g and f must be composable.
    MorId comp(MorId g, MorId f) const { return comp_[static_cast<size_t>(g) * morphisms.size() + f]; }

    const std::vector<MorId>& hom(ObjId x, ObjId y) const { return hom_[static_cast<size_t>(x) * objects.size() + y]; }

    // position of f inside hom(dom f, cod f)
    int hom_pos(MorId f) const { return hom_pos_[f]; }

    bool is_idempotent(MorId f) const { return dom(f) == cod(f) && comp(f, f) == f; }

    bool is_iso(MorId f, MorId* inverse = nullptr) const {
        for (MorId g : hom(cod(f), dom(f)))
            if (comp(g, f) == id(dom(f)) && comp(f, g) == id(cod(f))) {
                if (inverse) *inverse = g;
                return true;
            }
        return false;
    }

    // Structural equality: names are display data and do not participate.
    friend bool operator==(const FinCat& a, const FinCat& b) {
        if (a.objects.size() != b.objects.size() || a.morphisms.size() != b.morphisms.size())
            return false;
        for (size_t i = 0; i < a.morphisms.size(); ++i)
            if (a.morphisms[i].dom != b.morphisms[i].dom || a.morphisms[i].cod != b.morphisms[i].cod)
                return false;
        return a.identity == b.identity && a.comp_ == b.comp_;
    }

private:
    std::vector<MorId> comp_;                // |M|*|M|, kNoMor when not composable
    std::vector<std::vector<MorId>> hom_;    // |Ob|*|Ob|
    std::vector<int32_t> hom_pos_;

    friend class CatBuilder;
    friend std::vector<Diagnostic> check_category_laws(const FinCat&);
};

using Cat = std::shared_ptr<const FinCat>;

inline bool same_cat(const Cat& a, const Cat& b) { return a == b || *a == *b; }

// Checks every law and reports all violations, not just the first.
inline std::vector<Diagnostic> check_category_laws(const FinCat& c) {
    std::vector<Diagnostic> out;
    const int nm = c.n_mor();
    auto mname = [&](MorId f) { return c.morphisms[f].name; };

    if (static_cast<int>(c.identity.size()) != c.n_obj())
        out.push_back({"BadIdentity", "identity table has wrong length"});
    for (ObjId x = 0; x < c.n_obj() && x < static_cast<ObjId>(c.identity.size()); ++x) {
        MorId i = c.identity[x];
        if (i < 0 || i >= nm) {
            out.push_back({"DanglingReference", "identity of " + c.objects[x]});
        } else if (c.dom(i) != x || c.cod(i) != x) {
            out.push_back({"BadIdentity", c.objects[x] + ": identity is not an endomorphism"});
        }
    }
    for (MorId f = 0; f < nm; ++f) {
        for (MorId g = 0; g < nm; ++g) {
            MorId gf = c.comp_[static_cast<size_t>(g) * nm + f];
            if (!c.composable(g, f)) {
                if (gf != kNoMor)
                    out.push_back({"BadComposite", mname(g) + "∘" + mname(f) + " defined on non-composable pair"});
                continue;
            }
            if (gf == kNoMor) {
                out.push_back({"MissingComposite", mname(g) + "∘" + mname(f)});
            } else if (gf < 0 || gf >= nm) {
                out.push_back({"DanglingReference", mname(g) + "∘" + mname(f)});
            } else if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g)) {
                out.push_back({"BadComposite", mname(g) + "∘" + mname(f) + " has wrong boundary"});
            }
        }
    }
    if (!out.empty()) return out;  // unit/associativity checks need well-formed tables

    for (MorId f = 0; f < nm; ++f) {
        if (c.comp(c.id(c.cod(f)), f) != f)
            out.push_back({"UnitLaw", "id∘" + mname(f) + " ≠ " + mname(f)});
        if (c.comp(f, c.id(c.dom(f))) != f)
            out.push_back({"UnitLaw", mname(f) + "∘id ≠ " + mname(f)});
    }
    for (MorId f = 0; f < nm; ++f)
        for (MorId g = 0; g < nm; ++g) {
            if (!c.composable(g, f)) continue;
            for (MorId h = 0; h < nm; ++h) {
                if (!c.composable(h, g)) continue;
                if (c.comp(h, c.comp(g, f)) != c.comp(c.comp(h, g), f))
                    out.push_back({"NonAssociative",
                                   mname(h) + "∘(" + mname(g) + "∘" + mname(f) + ") ≠ (" + mname(h) + "∘" +
                                       mname(g) + ")∘" + mname(f)});
            }
        }
    return out;
}

// Incremental builder used both by the JSON front end and by constructions.
class CatBuilder {
public:
    explicit CatBuilder(std::string name = "") { cat_.name = std::move(name); }

    ObjId add_object(std::string name) {
        cat_.objects.push_back(std::move(name));
        return static_cast<ObjId>(cat_.objects.size() - 1);
    }
    MorId add_morphism(std::string name, ObjId dom, ObjId cod) {
        cat_.morphisms.push_back({std::move(name), dom, cod});
        return static_cast<MorId>(cat_.morphisms.size() - 1);
    }
    void set_identity(ObjId x, MorId f) {
        cat_.identity.resize(cat_.objects.size(), kNoMor);
        cat_.identity[x] = f;
    }
    void set_comp(MorId g, MorId f, MorId gf) {
        ensure_comp();
        cat_.comp_[static_cast<size_t>(g) * cat_.morphisms.size() + f] = gf;
    }
    MorId get_comp(MorId g, MorId f) {
        ensure_comp();
        return cat_.comp_[static_cast<size_t>(g) * cat_.morphisms.size() + f];
    }
    int n_obj() const { return static_cast<int>(cat_.objects.size()); }
    int n_mor() const { return static_cast<int>(cat_.morphisms.size()); }
    const MorRec& mor(MorId f) const { return cat_.morphisms[f]; }

    // Validates and freezes.  Returns diagnostics instead of a category when
    // any law fails; hand-written tables go through this path.
    std::vector<Diagnostic> try_finish(Cat& out) {
        ensure_comp();
        cat_.identity.resize(cat_.objects.size(), kNoMor);
        auto diags = check_category_laws(cat_);
        if (!diags.empty()) return diags;
        index();
        out = std::make_shared<FinCat>(std::move(cat_));
        return {};
    }

    // For internally generated categories where a violation is a bug.
    Cat finish() {
        Cat out;
        auto diags = try_finish(out);
        if (!diags.empty())
            throw internal_error("generated category '" + cat_.name + "' violates " + diags.front().code + ": " +
                                 diags.front().detail);
        return out;
    }

private:
    // All morphisms must be in place before the first set_comp call.
    void ensure_comp() {
        size_t want = cat_.morphisms.size() * cat_.morphisms.size();
        if (cat_.comp_.empty())
            cat_.comp_.assign(want, kNoMor);
        else if (cat_.comp_.size() != want)
            throw internal_error("CatBuilder: morphisms added after composition table was started");
    }
    void index() {
        const int no = cat_.n_obj(), nm = cat_.n_mor();
        cat_.hom_.assign(static_cast<size_t>(no) * no, {});
        cat_.hom_pos_.assign(nm, 0);
        for (MorId f = 0; f < nm; ++f) {
            auto& hs = cat_.hom_[static_cast<size_t>(cat_.dom(f)) * no + cat_.cod(f)];
            cat_.hom_pos_[f] = static_cast<int32_t>(hs.size());
            hs.push_back(f);
        }
    }
    FinCat cat_;
};

// dom/cod swapped, comp(g,f) := comp(f,g).  Involutive on the nose.
inline Cat opposite(const Cat& c) {
    CatBuilder b(c->name.empty() ? "op" : c->name + "^op");
    for (const auto& o : c->objects) b.add_object(o);
    for (const auto& m : c->morphisms) b.add_morphism(m.name, m.cod, m.dom);
    for (ObjId x = 0; x < c->n_obj(); ++x) b.set_identity(x, c->id(x));
    for (MorId f = 0; f < c->n_mor(); ++f)
        for (MorId g = 0; g < c->n_mor(); ++g)
            if (c->composable(g, f)) b.set_comp(f, g, c->comp(g, f));
    return b.finish();
}

inline std::vector<MorId> hom_set(const Cat& c, ObjId x, ObjId y) {
    if (x < 0 || x >= c->n_obj() || y < 0 || y >= c->n_obj())
        throw invalid_argument("hom_set: unknown object");
    return c->hom(x, y);
}

// Endomorphisms f of x with f∘f = f, in id order.
inline std::vector<MorId> idempotents_on(const Cat& c, ObjId x) {
    std::vector<MorId> out;
    for (MorId f : c->hom(x, x))
        if (c->comp(f, f) == f) out.push_back(f);
    return out;
}

}  // namespace fincat
