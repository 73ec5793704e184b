#pragma once

#include <string>
#include <vector>

#include "agp/ackermann.hpp"
#include "agp/term.hpp"

namespace agp {

// One sandwiching step: m_step = A_a(k, b).
struct SandwichStep {
    Nat a;
    Nat b;
    Nat m;
};

// The nested-interval approximation of m at base k: indices strictly
// decrease, values strictly increase, and k^(last value) exceeds m.
struct SandwichSeq {
    std::vector<SandwichStep> steps;
    Nat m;
    Nat k;

    // Second-to-last sandwiching value; 0 when there is at most one step.
    Nat penum() const {
        if (steps.size() < 2) return Nat(0);
        return steps[steps.size() - 2].m;
    }
};

SandwichSeq sandwich(const Nat& m, const Nat& k);

// Hereditary normal form of m at base k; adjacent equal blocks are merged
// into coefficients.
NFTerm normal_form(const Nat& m, const Nat& k);

// Value of a term at base k, or nullopt past the budget.
BoundedNat eval_term(const NFTerm& t, const Nat& k, const EvalBudget& budget = {});
Nat eval_term_meter(const NFTerm& t, const Nat& k, BudgetMeter& meter);

enum class Validity { Valid, Invalid, Exceeded };

struct ValidateResult {
    Validity verdict;
    std::string reason;  // set when Invalid
};

// A term is valid at base k iff re-normalizing its value reproduces it.
ValidateResult validate_nf(const NFTerm& t, const Nat& k, const EvalBudget& budget = {});

// Shape of a head block A_a(b):
//   CaseA: b = 0 (one-step sandwich);
//   CaseB: b equals the previous sandwiching value (argument's head index
//          strictly above the block's own index);
//   CaseC: anything else.
enum class NFClass { CaseA, CaseB, CaseC };

NFClass classify(const NFTerm& t, const Nat& k);

// Structural base change k -> ell (ell > k); preserves normal forms.
NFTerm base_change(const NFTerm& t, const Nat& k, const Nat& ell);

}  // namespace agp
