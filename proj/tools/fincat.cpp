// fincat: finite-category computations from the command line.
//
// Exit codes: 0 property holds / success, 1 property fails (witness in the
// report), 2 invalid input, 3 search or size budget exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fincat/gallery.hpp"
#include "fincat/json_io.hpp"
#include "fincat/parallel.hpp"

namespace {

using namespace fincat;

struct Options {
    int64_t budget = 0;      // 0 = default
    std::string seed;        // accepted, recorded, unused: everything is deterministic
    bool pretty = false;
    unsigned threads = 1;
    std::string out;
};

json g_meta;

void emit(const json& payload, const Options& opt) {
    json doc = payload;
    if (!g_meta.empty()) doc["meta"] = g_meta;
    std::string text = opt.pretty ? doc.dump(2) : doc.dump();
    if (!opt.out.empty() && opt.out != "-") {
        std::ofstream f(opt.out);
        f << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

void emit_diag(const std::string& code, const std::string& detail) {
    std::cerr << json{{"code", code}, {"detail", detail}}.dump() << "\n";
}

json read_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream f(path);
    if (!f) throw invalid_argument("cannot open " + path);
    return json::parse(f);
}

Cat read_category(const std::string& path) {
    auto parsed = parse_category(read_json(path));
    if (!parsed.diagnostics.empty()) {
        for (const auto& d : parsed.diagnostics) emit_diag(d.code, d.detail);
        throw invalid_argument("category in " + path + " is invalid");
    }
    return parsed.cat;
}

int cmd_validate(const std::string& path, const Options& opt) {
    auto parsed = parse_category(read_json(path));
    if (parsed.diagnostics.empty()) {
        emit({{"valid", true},
              {"objects", parsed.cat->n_obj()},
              {"morphisms", parsed.cat->n_mor()}},
             opt);
        return 0;
    }
    for (const auto& d : parsed.diagnostics) emit_diag(d.code, d.detail);
    emit({{"valid", false}, {"diagnostics", diagnostics_json(parsed.diagnostics)}}, opt);
    return 1;
}

int cmd_complete(const std::string& path, const std::string& functor_path, const Options& opt) {
    json result;
    if (!functor_path.empty()) {
        Fn f = parse_functor(read_json(functor_path));
        if (!path.empty() && !same_cat(read_category(path), f.source))
            throw invalid_argument("complete: the functor's source is not the given category");
        auto src = karoubi(f.source);
        auto tgt = karoubi(f.target);
        result["completed_functor"] = serialize_fn(complete_fn(f, src, tgt));
        result["completion"] = serialize_category(src.env);
        result["iota"] = serialize_fn(src.iota);
    } else {
        Cat c = read_category(path);
        auto k = karoubi(c);
        result["completion"] = serialize_category(k.env);
        result["iota"] = serialize_fn(k.iota);
        auto ic = is_idempotent_complete(c);
        result["base_idempotent_complete"] = ic.complete;
        if (!ic.complete) result["non_split_idempotent"] = c->morphisms[ic.non_split].name;
    }
    emit(result, opt);
    return 0;
}

int cmd_classify(const std::string& functor_path, const Options& opt) {
    Fn f = parse_functor(read_json(functor_path));
    FunctorReport r = classify(f);
    json report = serialize_functor_report(f, r);
    if (opt.pretty) {
        std::string s;
        auto say = [&](const char* name, bool v) { s += std::string(v ? "" : "not ") + name + "; "; };
        say("faithful", r.faithful);
        say("full", r.full);
        say("semiseparable", r.semiseparable);
        say("separable", r.separable);
        say("naturally full", r.naturally_full);
        say("surjective up to retracts", r.surjective_utr);
        report["summary"] = s;
    }
    emit(report, opt);
    return 0;
}

int cmd_quotient(const std::string& cat_path, const std::string& idem_path, const Options& opt) {
    Cat c = read_category(cat_path);
    Nat e = parse_idempotent_on(read_json(idem_path), c);
    Coidentifier co = coidentifier(c, e);
    json result;
    result["quotient"] = serialize_category(co.quotient);
    result["H"] = serialize_fn(co.H);
    result["naturally_full_witness"] = serialize_retraction(co.nat_full_witness);
    json lifts = json::array();
    for (auto [hbar, q] : coidentifier_lifts_idempotents(co))
        lifts.push_back({{"idempotent", co.quotient->morphisms[hbar].name}, {"lift", c->morphisms[q].name}});
    result["idempotent_lifts"] = lifts;
    emit(result, opt);
    return 0;
}

int cmd_adjoint(const std::string& functor_path, bool right, const Options& opt) {
    Fn f = parse_functor(read_json(functor_path));
    AdjointSearch r = right ? find_right_adjoint(f) : find_left_adjoint(f);
    if (!r.adjunction) {
        // the witness object whose comma category lacks an initial/terminal
        // object lives in the functor's target either way
        emit({{"found", false}, {"obstruction_object", f.target->objects.at(r.failed_at)}}, opt);
        return 1;
    }
    json result = serialize_adjunction(*r.adjunction);
    result["found"] = true;
    emit(result, opt);
    return 0;
}

int cmd_monad(const std::string& adj_path, const std::string& what, const Options& opt) {
    Adjunction a = parse_adjunction(read_json(adj_path));
    Monad t = monad_of(a);
    if (what == "separable") {
        auto sigma = separability_structure(t);
        json result{{"separable", sigma.has_value()}};
        if (sigma) result["sigma"] = serialize_components(*sigma);
        emit(result, opt);
        return sigma ? 0 : 1;
    }
    if (what == "em") {
        EMCat em = em_category(t);
        json result;
        result["category"] = serialize_category(em.cat);
        result["forgetful"] = serialize_fn(em.U);
        result["free"] = serialize_fn(em.V);
        result["comparison"] = serialize_fn(comparison(a, em));
        emit(result, opt);
        return 0;
    }
    if (what == "kleisli") {
        KleisliCat kl = kleisli_category(t);
        EMCat em = em_category(t);
        json result;
        result["category"] = serialize_category(kl.cat);
        result["forgetful"] = serialize_fn(kl.Up);
        result["free"] = serialize_fn(kl.Vp);
        result["embedding"] = serialize_fn(kleisli_to_em(kl, em));
        result["comparison"] = serialize_fn(kleisli_comparison(a, kl));
        emit(result, opt);
        return 0;
    }
    throw invalid_argument("monad: expected em, kleisli or separable");
}

int cmd_audit(const std::string& adj_path, const Options& opt) {
    Adjunction a = parse_adjunction(read_json(adj_path));
    TheoremReport r = audit(a, opt.threads);
    json report = serialize_theorem_report(r);
    if (opt.pretty) {
        int passed = 0;
        for (auto& c : r.clauses) passed += c.pass;
        report["summary"] = std::to_string(passed) + "/" + std::to_string(r.clauses.size()) + " clauses passed";
    }
    emit(report, opt);
    if (r.any_budget) return 3;
    return r.all_pass ? 0 : 1;
}

int cmd_gallery(const std::vector<std::string>& args, const Options& opt) {
    using namespace fincat::gallery;
    if (args.empty()) throw invalid_argument("gallery: expected a name");
    const std::string& name = args[0];
    auto arg = [&](size_t i) -> std::string {
        if (i >= args.size()) throw invalid_argument("gallery " + name + ": missing parameter");
        return args[i];
    };
    auto emit_cat = [&](const Cat& c) {
        emit(serialize_category(c), opt);
        return 0;
    };
    for (auto& nc : all_categories())
        if (nc.name == name) return emit_cat(nc.cat);
    if (name == "chain") return emit_cat(chain(std::stoi(arg(1))));
    if (name == "discrete") return emit_cat(discrete(std::stoi(arg(1))));
    if (name == "indiscrete") return emit_cat(indiscrete(std::stoi(arg(1))));
    if (name == "free_module") return emit_cat(free_module_cat(ring_by_name(arg(1)), std::stoi(arg(2))).cat);
    if (name == "karoubi_e") return emit_cat(karoubi(walking_idempotent()).env);
    for (auto& na : all_adjunctions())
        if ("adj_" + na.name == name) {
            emit(serialize_adjunction(na.adj), opt);
            return 0;
        }
    if (name == "adj_identity") {
        for (auto& nc : all_categories())
            if (nc.name == arg(1)) {
                emit(serialize_adjunction(identity_adjunction(nc.cat)), opt);
                return 0;
            }
        throw invalid_argument("gallery adj_identity: unknown category " + arg(1));
    }
    if (name == "central_idempotent") {
        RingTable ring = ring_by_name(arg(1));
        int z = -1;
        for (int i = 0; i < ring.n(); ++i)
            if (ring.elems[i] == arg(2)) z = i;
        if (z < 0) throw invalid_argument("NotCentralIdempotent: unknown element " + arg(2));
        ModuleCat mc = free_module_cat(ring, std::stoi(arg(3)));
        Nat e = central_idempotent_nat(mc, z);
        emit({{"category", serialize_category(mc.cat)}, {"components", serialize_components(e)}}, opt);
        return 0;
    }
    if (name == "idem_e") {
        Cat e_cat = walking_idempotent();
        Fn id = identity_functor(e_cat);
        Nat e = make_nat(id, id, {1});
        emit({{"category", serialize_category(e_cat)}, {"components", serialize_components(e)}}, opt);
        return 0;
    }
    std::string names = "terminal walking_idempotent walking_arrow chain discrete indiscrete monoid_z2 monoid_z3 "
                        "monoid_s3 monoid_idem env_e product_e_2 mod_* free_module karoubi_e central_idempotent "
                        "idem_e adj_identity";
    for (auto& na : all_adjunctions()) names += " adj_" + na.name;
    throw invalid_argument("gallery: unknown name " + name + "; available: " + names);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-category computations: completion, classification, quotients, monads"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("FINCAT_BUDGET")) opt.budget = std::atoll(env);
    app.add_option("--budget", opt.budget, "cap on search nodes (also FINCAT_BUDGET)");
    app.add_option("--seed", opt.seed, "accepted and recorded; all algorithms are deterministic");
    app.add_flag("--pretty", opt.pretty, "indent JSON output");
    app.add_option("--threads", opt.threads, "worker threads for audit clauses");
    app.add_option("-o,--out", opt.out, "write the report to a file instead of stdout");

    std::string file, functor_file, idem_file, adj_file, monad_what;
    bool right = false;
    std::vector<std::string> gallery_args;

    auto* validate = app.add_subcommand("validate", "check category laws, reporting every violation");
    validate->add_option("file", file)->required();
    auto* complete = app.add_subcommand("complete", "idempotent completion of a category (or a functor)");
    complete->add_option("file", file);
    complete->add_option("--functor", functor_file);
    auto* classify_cmd = app.add_subcommand("classify", "decide the functor classes and their witnesses");
    classify_cmd->add_option("--functor", functor_file)->required();
    auto* quotient = app.add_subcommand("quotient", "coidentifier of an idempotent natural transformation");
    quotient->add_option("--category", file)->required();
    quotient->add_option("--idempotent", idem_file)->required();
    auto* adjoint_cmd = app.add_subcommand("adjoint", "search a left (or right) adjoint");
    adjoint_cmd->add_option("--functor", functor_file)->required();
    adjoint_cmd->add_flag("--right", right);
    auto* monad = app.add_subcommand("monad", "Eilenberg-Moore / Kleisli / separability of the induced monad");
    monad->add_option("--adjunction", adj_file)->required();
    monad->add_option("what", monad_what)->required()->check(CLI::IsMember({"em", "kleisli", "separable"}));
    auto* audit_cmd = app.add_subcommand("audit", "replay the comparison-functor theorems on an adjunction");
    audit_cmd->add_option("--adjunction", adj_file)->required();
    auto* gallery_cmd = app.add_subcommand("gallery", "emit a named test-corpus object");
    gallery_cmd->add_option("args", gallery_args);

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    if (opt.budget > 0) Budget::current().max_search_nodes = opt.budget;
    if (!opt.seed.empty()) g_meta["seed"] = opt.seed;

    try {
        if (*validate) return cmd_validate(file, opt);
        if (*complete) return cmd_complete(file, functor_file, opt);
        if (*classify_cmd) return cmd_classify(functor_file, opt);
        if (*quotient) return cmd_quotient(file, idem_file, opt);
        if (*adjoint_cmd) return cmd_adjoint(functor_file, right, opt);
        if (*monad) return cmd_monad(adj_file, monad_what, opt);
        if (*audit_cmd) return cmd_audit(adj_file, opt);
        if (*gallery_cmd) return cmd_gallery(gallery_args, opt);
    } catch (const budget_error& e) {
        emit_diag("BudgetExceeded", e.what());
        return 3;
    } catch (const invalid_argument& e) {
        emit_diag("InvalidInput", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        emit_diag("InvalidInput", e.what());
        return 2;
    } catch (const internal_error& e) {
        emit_diag("InternalError", e.what());
        return 1;
    }
    return 2;
}
