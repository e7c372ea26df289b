#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fincat {

// Raised when a construction or search would exceed the configured caps.
// Distinct from "no solution exists": callers must not conflate the two.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or incompatible input (boundary mismatches, bad ids, ...).
struct invalid_argument : std::invalid_argument {
    explicit invalid_argument(const std::string& what) : std::invalid_argument(what) {}
};

// A law that is guaranteed by construction failed to hold.  Always a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

struct Budget {
    int64_t max_objects = 512;
    int64_t max_morphisms = 8192;
    int64_t max_search_nodes = 50'000'000;

    static Budget& current() {
        static Budget b;
        return b;
    }
};

// Per-search node counter.
class NodeCounter {
public:
    explicit NodeCounter(int64_t limit) : limit_(limit) {}
    void tick(const char* where) {
        if (++count_ > limit_)
            throw budget_error(std::string("search budget exceeded in ") + where);
    }
    int64_t count() const { return count_; }

private:
    int64_t limit_;
    int64_t count_ = 0;
};

inline void check_size_caps(int64_t objects, int64_t morphisms, const char* where,
                            const Budget& budget = Budget::current()) {
    if (objects > budget.max_objects || morphisms > budget.max_morphisms)
        throw budget_error(std::string(where) + ": result would have " + std::to_string(objects) +
                           " objects / " + std::to_string(morphisms) +
                           " morphisms, over the configured cap");
}

}  // namespace fincat
