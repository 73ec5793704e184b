#pragma once

#include <optional>

#include "agp/budget.hpp"
#include "agp/errors.hpp"
#include "agp/nat.hpp"

namespace agp {

// Second argument of the hierarchy: a natural number or the -1 sentinel,
// which is only meaningful as an Ackermann argument (A_a(-1) = 1).
struct ArgOrMinusOne {
    std::optional<Nat> v;  // nullopt encodes -1

    ArgOrMinusOne(Nat n) : v(std::move(n)) {}  // NOLINT: implicit by design
    ArgOrMinusOne(unsigned long n) : v(Nat(n)) {}
    static ArgOrMinusOne minus_one() { return ArgOrMinusOne{}; }

    bool is_minus_one() const { return !v.has_value(); }

private:
    ArgOrMinusOne() = default;
};

// Budget-bounded value.  nullopt means the true value's representation
// surpasses the budget; it never means "unknown but possibly small".
using BoundedNat = std::optional<Nat>;

// A_a(k, b) under the given budget.  A_0(k,b) = k^b, A_a(k,-1) = 1,
// A_{a+1}(k,b) = k-fold application of A_a to A_{a+1}(k,b-1).
BoundedNat ack_eval(const Nat& a, const Nat& k, const ArgOrMinusOne& b,
                    const EvalBudget& budget = {});

// Threshold comparison: value if A_a(k,b) <= t, nullopt when strictly greater.
// Never loops unboundedly: values dominate max{a,b}, so oversized inputs are
// pruned without recursion.
using ThresholdResult = std::optional<Nat>;
ThresholdResult ack_cmp_threshold(const Nat& a, const Nat& k, const ArgOrMinusOne& b,
                                  const Nat& t);

// j-fold iterate A_a^j(k, b), budget-bounded.  j = 0 returns b itself and is
// rejected on the -1 sentinel.
BoundedNat ack_iter(const Nat& a, const Nat& k, const ArgOrMinusOne& b, const Nat& j,
                    const EvalBudget& budget = {});

// Internal entry point shared with the normal-form machinery: evaluate under
// an existing meter, throwing BudgetExhausted instead of returning nullopt.
Nat ack_eval_meter(const Nat& a, const Nat& k, const ArgOrMinusOne& b, BudgetMeter& meter);

// Drops all memoized values (test hook; the cache is otherwise invisible).
void ack_cache_clear();

}  // namespace agp
