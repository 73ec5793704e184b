#pragma once

#include <optional>

#include "agp/nat.hpp"
#include "agp/normal_form.hpp"  // SandwichSeq record only

namespace agp::oracle {

// Definitional evaluator: plain loops, no memoization, no shortcuts.
// Returns the value when it is <= cap, nullopt otherwise.
std::optional<Nat> naive_ack(const Nat& a, const Nat& k, const std::optional<Nat>& b,
                             const Nat& cap);

// Sandwiching by exhaustive linear search over indices and arguments.
SandwichSeq oracle_sandwich(const Nat& m, const Nat& k);

// Integer base change k -> ell computed directly on values.
// Throws Overflow past roughly a million digits.
Nat oracle_base_change(const Nat& m, const Nat& k, const Nat& ell);

// Value of (change base k -> k+1, subtract one).
Nat oracle_goodstein_step(const Nat& n, const Nat& k);

// Greedy one-shot approximation: A_{a0}(b0) maximal below m, then the
// largest index realizing that value.
struct AltNF {
    Nat a0, b0, a, b, c;
};

AltNF alt_normal_form(const Nat& m, const Nat& k);

}  // namespace agp::oracle
