#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "agp/expansion.hpp"
#include "agp/normal_form.hpp"
#include "agp/omega.hpp"

namespace agp {

enum class GMode { Concrete, Symbolic };

// Process state after i steps; the working base is i + 2.  Concrete states
// carry the number itself, symbolic ones its base-(i+2) normal form.
struct GoodsteinState {
    Nat i;
    GMode mode;
    std::optional<Nat> value;  // concrete mode
    NFTerm term;               // symbolic mode

    Nat base() const { return i + 2; }
    bool is_zero() const { return mode == GMode::Concrete ? *value == 0 : !term; }
};

GoodsteinState goodstein_start(const Nat& m, GMode mode);

// One step: change base i+2 -> i+3, subtract one.  nullopt on budget blowup.
std::optional<GoodsteinState> gstep(const GoodsteinState& s, const EvalBudget& budget = {});

struct GoodsteinEntry {
    Nat i;
    Nat base;
    std::string nf;       // printed normal form (values can be astronomical)
    OrdTerm ordinal;      // base-omega image
    bool descent_ok;      // ordinal strictly above the next entry's (last: true)
};

struct GoodsteinTrace {
    Nat seed;
    GMode mode;
    std::vector<GoodsteinEntry> entries;
    bool terminated;  // reached value 0
    Nat outcome_i;    // termination index, or last computed index
};

GoodsteinTrace grun(const Nat& m, GMode mode, const Nat& max_steps,
                    const EvalBudget& budget = {});

// All consecutive ordinal pairs strictly decreasing; vacuously true for
// traces with fewer than two entries.
bool descent_check(const GoodsteinTrace& tr);

struct FsBoundRow {
    Nat k;
    bool ok;
    bool blown;  // the trace had no entry k (budget)
};

struct FsBoundReport {
    std::vector<FsBoundRow> rows;
    bool all_ok;
};

// Checks O_m(k) >= <k+1>O_m(0) under the term order for k = 1..steps.
FsBoundReport fs_bound_check(const Nat& m, const Nat& steps, const EvalBudget& budget = {});

nlohmann::json trace_json(const GoodsteinTrace& tr);

}  // namespace agp
