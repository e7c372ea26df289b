#pragma once

#include <functional>
#include <utility>
#include <optional>
#include <vector>

#include "fincat/fn.hpp"

namespace fincat {

// Backtracking search for natural families t_X : A(X) → B(X).  Components are
// assigned in object order with candidate values in morphism-id order, so the
// first solution found is the least one in canonical order and full
// enumeration is lexicographic.
struct NatSearch {
    NatSearch(Fn a, Fn b) : A(std::move(a)), B(std::move(b)) {}

    Fn A;
    Fn B;
    // Extra per-component admissibility (on top of boundary correctness).
    std::function<bool(ObjId, MorId)> component_ok;
    // Called after assigning the prefix [0..x]; may reject the partial family.
    std::function<bool(const std::vector<MorId>&, ObjId)> partial_ok;
    bool require_seminatural = false;
    int64_t node_limit = Budget::current().max_search_nodes;

    std::optional<Nat> first() const {
        std::vector<Nat> out = run(1);
        if (out.empty()) return std::nullopt;
        return out.front();
    }

    std::vector<Nat> all(size_t limit) const { return run(limit); }

private:
    bool natural_so_far(const std::vector<MorId>& at, ObjId upto) const {
        const Cat& c = A.source;
        const Cat& d = A.target;
        for (MorId m = 0; m < c->n_mor(); ++m) {
            ObjId a = c->dom(m), b = c->cod(m);
            if (a > upto || b > upto) continue;
            if (a != upto && b != upto) continue;  // checked earlier
            if (d->comp(at[b], A.on_mor[m]) != d->comp(B.on_mor[m], at[a])) return false;
        }
        return true;
    }

    std::vector<Nat> run(size_t limit) const {
        const Cat& c = A.source;
        const Cat& d = A.target;
        std::vector<std::vector<MorId>> domains(c->n_obj());
        for (ObjId x = 0; x < c->n_obj(); ++x) {
            for (MorId cand : d->hom(A.on_obj[x], B.on_obj[x])) {
                if (component_ok && !component_ok(x, cand)) continue;
                if (require_seminatural && d->comp(cand, A.on_mor[c->id(x)]) != cand) continue;
                domains[x].push_back(cand);
            }
            if (domains[x].empty()) return {};
        }
        std::vector<Nat> found;
        std::vector<MorId> at(c->n_obj(), kNoMor);
        NodeCounter nodes(node_limit);
        dfs(0, at, domains, nodes, limit, found);
        return found;
    }

    void dfs(ObjId x, std::vector<MorId>& at, const std::vector<std::vector<MorId>>& domains, NodeCounter& nodes,
             size_t limit, std::vector<Nat>& found) const {
        if (found.size() >= limit) return;
        if (x == A.source->n_obj()) {
            found.push_back(make_nat(A, B, at, false));
            return;
        }
        for (MorId cand : domains[x]) {
            nodes.tick("natural transformation search");
            at[x] = cand;
            if (natural_so_far(at, x) && (!partial_ok || partial_ok(at, x)))
                dfs(x + 1, at, domains, nodes, limit, found);
            if (found.size() >= limit) break;
        }
        at[x] = kNoMor;
    }
};

inline std::optional<Nat> find_nat_between(const Fn& a, const Fn& b) { return NatSearch(a, b).first(); }

// First invertible natural transformation F → G in canonical order.
inline std::optional<Nat> iso_of_functors(const Fn& f, const Fn& g) {
    NatSearch s(f, g);
    s.component_ok = [&](ObjId, MorId cand) { return f.target->is_iso(cand); };
    return s.first();
}

inline std::vector<Nat> enumerate_isos_of_functors(const Fn& f, const Fn& g, size_t limit) {
    NatSearch s(f, g);
    s.component_ok = [&](ObjId, MorId cand) { return f.target->is_iso(cand); };
    return s.all(limit);
}

// Natural ξ : Id → A with ρ∘ξ = Id pointwise (a section of ρ), etc. are
// expressed by callers through component_ok filters on NatSearch.

}  // namespace fincat
