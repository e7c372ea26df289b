#include <catch2/catch_amalgamated.hpp>

#include "suite.hpp"

using namespace fincat;
using namespace fincat::gallery;
using fixtures::brute_force_retractions;
using fixtures::raw_candidate_count;

namespace {
Fn g_E_to_one() { return fixtures::collapse_to_terminal(walking_idempotent()); }
}  // namespace

TEST_CASE("hom-set predicates on the standard instances") {
    Cat e = walking_idempotent();
    Fn id = identity_functor(e);
    REQUIRE(is_faithful(id));
    REQUIRE(is_full(id));
    Fn g = g_E_to_one();
    REQUIRE(is_full(g));
    MorPairWitness w;
    REQUIRE_FALSE(is_faithful(g, &w));
    REQUIRE(g.mor(w.f) == g.mor(w.g));
    REQUIRE(is_fully_faithful(karoubi(e).iota));
}

TEST_CASE("the 𝒫-search on G : E → 𝟙") {
    Fn g = g_E_to_one();
    SECTION("semiseparable: exists and is unique, with 𝒫(id₁) = e") {
        auto all = enumerate_hom_retractions(g, RetractionMode::semiseparable, 10);
        REQUIRE(all.size() == 1);
        // the only value satisfying two-variable naturality is e
        REQUIRE(all[0].apply(0, 0, 0) == 1);
    }
    SECTION("separable: none exists (exhaustive)") {
        REQUIRE_FALSE(search_hom_retraction(g, RetractionMode::separable).has_value());
    }
    SECTION("naturally full: exists (H is the quotient functor of e)") {
        REQUIRE(search_hom_retraction(g, RetractionMode::naturally_full).has_value());
    }
}

TEST_CASE("identity functors are separable with the identity witness") {
    Cat one = terminal();
    auto p = search_hom_retraction(identity_functor(one), RetractionMode::separable);
    REQUIRE(p.has_value());
    REQUIRE(p->apply(0, 0, 0) == 0);
    REQUIRE(enumerate_hom_retractions(identity_functor(one), RetractionMode::semiseparable, 10).size() == 1);
}

TEST_CASE("associated idempotent of G : E → 𝟙 is e, with its universal property") {
    Fn g = g_E_to_one();
    auto p = search_hom_retraction(g, RetractionMode::semiseparable);
    REQUIRE(p.has_value());
    Nat e = associated_idempotent(*p);
    REQUIRE(e.at[0] == 1);
    // Fe = Id_F and idempotency are asserted inside; a wrong witness is rejected
    HomRetraction bad = *p;
    bad.maps[0][0] = 0;  // 𝒫(id) := id is not natural here
    REQUIRE_FALSE(validate_hom_retraction(bad, RetractionMode::semiseparable));
    REQUIRE_THROWS_AS(associated_idempotent(bad), invalid_argument);
}

TEST_CASE("separable iff the associated idempotent is the identity, on the suite") {
    for (auto& nf : fixtures::suite_functors()) {
        auto p = search_hom_retraction(nf.fn, RetractionMode::semiseparable);
        if (!p) continue;
        Nat e = associated_idempotent(*p);
        bool e_is_id = true;
        for (ObjId x = 0; x < nf.fn.source->n_obj(); ++x)
            e_is_id = e_is_id && e.at[x] == nf.fn.source->id(x);
        bool sep = search_hom_retraction(nf.fn, RetractionMode::separable).has_value();
        INFO(nf.name);
        REQUIRE(sep == e_is_id);
    }
}

TEST_CASE("separable iff semiseparable and faithful; naturally full iff semiseparable and full") {
    for (auto& nf : fixtures::suite_functors()) {
        INFO(nf.name);
        bool ss = is_semiseparable(nf.fn);
        bool sep = is_separable(nf.fn);
        bool nf_ = is_naturally_full(nf.fn);
        REQUIRE(sep == (ss && is_faithful(nf.fn)));
        REQUIRE(nf_ == (ss && is_full(nf.fn)));
    }
}

TEST_CASE("composition laws for semiseparability over composable suite pairs") {
    auto fns = fixtures::suite_functors();
    int pairs = 0;
    for (auto& a : fns)
        for (auto& b : fns) {
            if (!same_cat(a.fn.target, b.fn.source)) continue;
            if (a.fn.source->n_mor() > 16 || b.fn.target->n_mor() > 40) continue;
            ++pairs;
            INFO(b.name + " ∘ " + a.name);
            Fn gf = compose_fn(b.fn, a.fn);
            bool f_ss = is_semiseparable(a.fn), g_sep = is_separable(b.fn);
            bool f_nf = is_naturally_full(a.fn), g_ss = is_semiseparable(b.fn);
            bool gf_ss = is_semiseparable(gf);
            if (f_ss && g_sep) REQUIRE(gf_ss);
            if (f_nf && g_ss) REQUIRE(gf_ss);
            if (gf_ss && is_faithful(b.fn)) REQUIRE(f_ss);
        }
    REQUIRE(pairs > 10);
}

TEST_CASE("the composite witness and the idempotent of a composite") {
    // when G is separable and F semiseparable, e^{GF} = e^F via 𝒫^F∘𝒫^G
    auto fns = fixtures::suite_functors();
    int checked = 0;
    for (auto& a : fns)
        for (auto& b : fns) {
            if (!same_cat(a.fn.target, b.fn.source)) continue;
            if (a.fn.source->n_mor() > 16 || b.fn.target->n_mor() > 40) continue;
            auto pf = search_hom_retraction(a.fn, RetractionMode::semiseparable);
            auto pg = search_hom_retraction(b.fn, RetractionMode::separable);
            if (!pf || !pg) continue;
            Fn gf = compose_fn(b.fn, a.fn);
            HomRetraction pgf = compose_retractions(*pf, *pg, gf);
            std::string why;
            INFO(b.name + " ∘ " + a.name + ": " + why);
            REQUIRE(validate_hom_retraction(pgf, RetractionMode::semiseparable, &why));
            REQUIRE(associated_idempotent(pgf).at == associated_idempotent(*pf).at);
            ++checked;
        }
    REQUIRE(checked >= 5);
}

TEST_CASE("uniqueness of the associated idempotent across all witnesses, on tiny functors") {
    for (auto& nf : fixtures::tiny_functors()) {
        auto all = enumerate_hom_retractions(nf.fn, RetractionMode::semiseparable, 1000);
        if (all.empty()) continue;
        Nat e0 = associated_idempotent(all[0]);
        for (auto& p : all) REQUIRE(associated_idempotent(p).at == e0.at);
    }
}

TEST_CASE("oracle equivalence: the CSP agrees with brute-force enumeration") {
    for (auto& nf : fixtures::suite_functors()) {
        if (raw_candidate_count(nf.fn, 100000) > 100000) continue;
        for (RetractionMode mode :
             {RetractionMode::semiseparable, RetractionMode::separable, RetractionMode::naturally_full}) {
            auto brute = brute_force_retractions(nf.fn, mode, 5);
            auto fast = enumerate_hom_retractions(nf.fn, mode, 5);
            INFO(nf.name + " mode " + mode_name(mode));
            REQUIRE(brute.size() == fast.size());
            for (size_t i = 0; i < brute.size(); ++i) REQUIRE(brute[i].maps == fast[i].maps);
        }
    }
}

TEST_CASE("maschke, dual maschke, conservative") {
    Cat e = walking_idempotent();
    Fn id = identity_functor(e);
    REQUIRE(is_maschke(id));
    REQUIRE(is_dual_maschke(id));
    REQUIRE(is_conservative(id));
    Fn g = g_E_to_one();
    MorId w = kNoMor;
    REQUIRE_FALSE(is_conservative(g, &w));
    REQUIRE(w == 1);  // e maps to an iso but is not one
    // every separable suite functor is maschke and dual maschke
    for (auto& nf : fixtures::suite_functors()) {
        if (!is_separable(nf.fn)) continue;
        INFO(nf.name);
        REQUIRE(is_maschke(nf.fn));
        REQUIRE(is_dual_maschke(nf.fn));
        REQUIRE(is_conservative(nf.fn));
    }
}

TEST_CASE("surjective up to retracts") {
    Cat e = walking_idempotent();
    REQUIRE(is_surjective_utr(identity_functor(e)));
    auto k = karoubi(e);
    std::vector<RetractOf> data;
    REQUIRE(is_surjective_utr(k.iota, &data));
    // (∗,e) is a retract of ι(∗) via i = p = e
    REQUIRE(data[1].through == 0);
    REQUIRE(k.underlying[data[1].in] == 1);
    REQUIRE(k.underlying[data[1].out] == 1);
    // picking the source of the walking arrow misses the target object
    Cat one = terminal(), two = walking_arrow();
    Fn pick0 = make_functor(one, two, {0}, {two->id(0)}, "pick0");
    ObjId missed = -1;
    REQUIRE_FALSE(is_surjective_utr(pick0, nullptr, &missed));
    REQUIRE(missed == 1);
}

TEST_CASE("classify aggregates the independent decisions") {
    Fn g = g_E_to_one();
    FunctorReport r = classify(g);
    REQUIRE(r.semiseparable);
    REQUIRE_FALSE(r.separable);
    REQUIRE(r.naturally_full);
    REQUIRE(r.full);
    REQUIRE_FALSE(r.faithful);
    REQUIRE_FALSE(r.conservative);
    REQUIRE(r.surjective_utr);
    REQUIRE(r.idempotent.has_value());
    REQUIRE(r.idempotent->at[0] == 1);
    REQUIRE(r.search_nodes > 0);
    FunctorReport rid = classify(identity_functor(walking_idempotent()));
    REQUIRE(rid.faithful);
    REQUIRE(rid.full);
    REQUIRE(rid.separable);
    REQUIRE(rid.maschke);
    REQUIRE(rid.dual_maschke);
}

TEST_CASE("enumeration counts frozen by the brute-force oracle") {
    // ι of the walking arrow into its envelope: exactly one semiseparability witness
    Cat two = walking_arrow();
    Fn iota = karoubi(two).iota;
    auto brute = brute_force_retractions(iota, RetractionMode::semiseparable, 100);
    REQUIRE(enumerate_hom_retractions(iota, RetractionMode::semiseparable, 100).size() == brute.size());
    REQUIRE(brute.size() == 1);
}
