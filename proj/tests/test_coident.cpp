#include <catch2/catch_amalgamated.hpp>

#include "suite.hpp"

using namespace fincat;
using namespace fincat::gallery;

namespace {
Nat nontrivial_e_on_E() {
    Cat e = walking_idempotent();
    Fn id = identity_functor(e);
    return make_nat(id, id, {1});
}
}  // namespace

TEST_CASE("the coidentifier of e on E is the terminal category") {
    Cat e = walking_idempotent();
    Coidentifier co = coidentifier(e, nontrivial_e_on_E());
    REQUIRE(*co.quotient == *terminal());
    REQUIRE(co.cls[0] == co.cls[1]);  // id ∼ e since e∘id = e∘e
    REQUIRE(co.H.obj(0) == 0);
}

TEST_CASE("e = Id gives back the category on the nose") {
    for (auto& nc : suite_categories()) {
        if (nc.cat->n_mor() > 16) continue;
        Fn id = identity_functor(nc.cat);
        Coidentifier co = coidentifier(nc.cat, identity_nat(id));
        INFO(nc.name);
        REQUIRE(*co.quotient == *nc.cat);
        REQUIRE(co.H == id);
    }
}

TEST_CASE("posets force e = Id") {
    Cat two = walking_arrow();
    auto es = enumerate_idempotent_nats(two);
    REQUIRE(es.size() == 1);
    REQUIRE(es[0].at == identity_nat(identity_functor(two)).at);
}

TEST_CASE("the quotient functor is naturally full, surjective, with associated idempotent e") {
    for (auto& nc : suite_categories()) {
        if (nc.cat->n_mor() > 16) continue;
        for (auto& e : enumerate_idempotent_nats(nc.cat)) {
            Coidentifier co = coidentifier(nc.cat, e);  // witness + idempotent asserted inside
            INFO(nc.name);
            REQUIRE(is_full(co.H));
            REQUIRE(is_naturally_full(co.H));
            // recomputing the idempotent through classify gives e back
            FunctorReport r = classify(co.H);
            REQUIRE(r.idempotent.has_value());
            REQUIRE(r.idempotent->at == e.at);
        }
    }
}

TEST_CASE("factor_through_coidentifier") {
    Cat e = walking_idempotent();
    Nat en = nontrivial_e_on_E();
    Coidentifier co = coidentifier(e, en);
    SECTION("H itself factors as the identity") {
        auto r = factor_through_coidentifier(co.H, co);
        REQUIRE(r.factored.has_value());
        REQUIRE(*r.factored == identity_functor(co.quotient));
    }
    SECTION("G : E → 𝟙 factors through its associated idempotent with G_e = Id") {
        Fn g = fixtures::collapse_to_terminal(e);
        auto r = factor_through_coidentifier(g, co);
        REQUIRE(r.factored.has_value());
        REQUIRE(*r.factored == identity_functor(terminal()));
        REQUIRE(compose_fn(*r.factored, co.H) == g);
    }
    SECTION("Id_E does not factor; the obstruction is e itself") {
        auto r = factor_through_coidentifier(identity_functor(e), co);
        REQUIRE_FALSE(r.factored.has_value());
        REQUIRE(r.obstruction == 0);
    }
}

TEST_CASE("factor_nat transports transformations componentwise") {
    Cat e = walking_idempotent();
    Coidentifier co = coidentifier(e, nontrivial_e_on_E());
    Fn g = fixtures::collapse_to_terminal(e);
    Fn ge = *factor_through_coidentifier(g, co).factored;
    Nat beta = identity_nat(g);
    Nat be = factor_nat(beta, co, ge, ge);
    REQUIRE(be.at == beta.at);
    REQUIRE_THROWS_AS(factor_nat(identity_nat(identity_functor(e)), co, ge, ge), invalid_argument);
}

TEST_CASE("canonical factorization: F = F_e ∘ H with F_e separable") {
    SECTION("a separable functor factors trivially") {
        Cat one = terminal();
        Fn id = identity_functor(one);
        auto p = search_hom_retraction(id, RetractionMode::semiseparable);
        auto cf = canonical_factorization(id, *p);
        REQUIRE(*cf.coid.quotient == *one);
        REQUIRE(cf.factor == id);
    }
    SECTION("G : E → 𝟙") {
        Fn g = fixtures::collapse_to_terminal(walking_idempotent());
        auto p = search_hom_retraction(g, RetractionMode::semiseparable);
        auto cf = canonical_factorization(g, *p);
        REQUIRE(cf.e.at[0] == 1);
        REQUIRE(*cf.coid.quotient == *terminal());
        REQUIRE(cf.factor == identity_functor(terminal()));
    }
    SECTION("the quotient functor factors through itself with H_e = Id") {
        for (auto& nc : suite_categories()) {
            if (nc.cat->n_mor() > 16) continue;
            for (auto& e : enumerate_idempotent_nats(nc.cat)) {
                Coidentifier co = coidentifier(nc.cat, e);
                // the naturally-full witness is in particular a semiseparability witness
                auto cf = canonical_factorization(co.H, co.nat_full_witness);
                INFO(nc.name);
                REQUIRE(cf.e.at == e.at);
                REQUIRE(cf.factor == identity_functor(co.quotient));
            }
        }
    }
    SECTION("every semiseparable suite functor factors exactly") {
        for (auto& nf : fixtures::suite_functors()) {
            if (nf.fn.source->n_mor() > 31 || nf.fn.target->n_mor() > 31) continue;
            auto p = search_hom_retraction(nf.fn, RetractionMode::semiseparable);
            if (!p) continue;
            INFO(nf.name);
            auto cf = canonical_factorization(nf.fn, *p);  // equalities asserted inside
            REQUIRE(compose_fn(cf.factor, cf.coid.H) == nf.fn);
            REQUIRE(is_separable(cf.factor));
        }
    }
}

TEST_CASE("second factorization clause: F = S∘N with S separable, N naturally full") {
    // instances produced by the canonical factorization itself: S = F_e, N = H
    for (auto& nc : suite_categories()) {
        if (nc.cat->n_mor() > 16) continue;
        for (auto& e : enumerate_idempotent_nats(nc.cat)) {
            Coidentifier co = coidentifier(nc.cat, e);
            Fn n = co.H;  // naturally full
            // pick S separable out of the gallery: ι of the quotient
            Fn s = karoubi(co.quotient).iota;
            Fn f = compose_fn(s, n);
            auto p = search_hom_retraction(f, RetractionMode::semiseparable);
            REQUIRE(p.has_value());
            auto cf = canonical_factorization(f, *p);
            // e is also the associated idempotent of N, so N factors through H
            REQUIRE(cf.e.at == e.at);
            auto ne = factor_through_coidentifier(n, cf.coid);
            REQUIRE(ne.factored.has_value());
            REQUIRE(is_fully_faithful(*ne.factored));
            REQUIRE(compose_fn(*ne.factored, cf.coid.H) == n);
            REQUIRE(compose_fn(s, *ne.factored) == cf.factor);
            // uniqueness: H is surjective on objects and morphisms, so any
            // functor with X∘H = N is determined entry by entry
            for (MorId m = 0; m < cf.coid.quotient->n_mor(); ++m) {
                MorId rep = kNoMor;
                for (MorId b = 0; b < nc.cat->n_mor(); ++b)
                    if (cf.coid.cls[b] == m && cf.coid.rep[b] == b) rep = b;
                REQUIRE(ne.factored->mor(m) == n.mor(rep));
            }
        }
    }
}

TEST_CASE("the quotient functor lifts idempotents; completeness descends") {
    for (auto& nc : suite_categories()) {
        if (nc.cat->n_mor() > 16) continue;
        for (auto& e : enumerate_idempotent_nats(nc.cat)) {
            Coidentifier co = coidentifier(nc.cat, e);
            auto lifts = coidentifier_lifts_idempotents(co);  // Hq = h̄ asserted inside
            size_t total = 0;
            for (ObjId x = 0; x < co.quotient->n_obj(); ++x) total += idempotents_on(co.quotient, x).size();
            REQUIRE(lifts.size() == total);
            if (is_idempotent_complete(nc.cat).complete) {
                INFO(nc.name);
                REQUIRE(is_idempotent_complete(co.quotient).complete);
            }
        }
    }
}

TEST_CASE("rejects transformations that are not idempotent naturals") {
    Cat z2 = monoid_z2();
    Fn id = identity_functor(z2);
    Nat a = make_nat(id, id, {1});  // the involution: natural but not idempotent
    REQUIRE_FALSE(is_idempotent_nat(a));
    REQUIRE_THROWS_AS(coidentifier(z2, a), invalid_argument);
}
