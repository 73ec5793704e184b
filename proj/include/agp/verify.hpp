#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agp/budget.hpp"
#include "agp/nat.hpp"

namespace agp::verify {

struct Options {
    Nat limit = 0;         // 0: suite default
    uint64_t seed = 12345;  // RNG seed for sampled suites
    EvalBudget budget;
};

struct Result {
    std::string name;
    bool passed = true;
    uint64_t checks = 0;
    uint64_t skipped = 0;  // budget-limited cases, reported but not counted
    std::vector<std::string> failures;
    std::string note;

    void fail(const std::string& msg) {
        passed = false;
        if (failures.size() < 12) failures.push_back(msg);
    }
};

std::vector<std::string> suite_names();

// Runs one named suite; nullopt for unknown names.
std::optional<Result> run_suite(const std::string& name, const Options& opt);

// Individual suites (used directly by the acceptance harness).
Result ackermann_suite(const Options&);        // growth laws, oracle agreement
Result sandwich_oracle_suite(const Options&);  // exhaustive equality with the oracle
Result sandwich_laws_suite(const Options&);    // step inequalities, prefix property
Result roundtrip_suite(const Options&);        // value -> term -> value
Result predecessor_suite(const Options&);      // m-1 sweep and landmark cases
Result left_expansion_suite(const Options&);   // chain inequalities, k*c_a law
Result base_change_suite(const Options&);      // monotone values, preserved forms
Result commutation_suite(const Options&);      // base-omega image is base-blind
Result lemma13_suite(const Options&);          // [k] of the image vs image of value-1
Result fundseq_suite(const Options&);          // pinned steps plus descent sampling
Result ord_order_suite(const Options&);        // total-order sampling
Result bachmann_suite(const Options&);         // gap property sampling
Result preceq_monotone_suite(const Options&);  // step-chains survive larger k
Result goodstein_suite(const Options&);        // small seeds, both modes
Result alt_nf_suite(const Options&);           // greedy form and range separation

}  // namespace agp::verify
