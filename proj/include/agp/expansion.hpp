#pragma once

#include <optional>
#include <vector>

#include "agp/normal_form.hpp"

namespace agp {

// seed wrapped in `times` single blocks A_index(.).
NFTerm wrap_blocks(const NFTerm& index, const Nat& times, NFTerm seed);

// A_{a-1}^ell(A_a(b-s)) as a term, for a single head block A_a(b) with a >= 1
// and s in [1, b+1] (s = b+1 reaches the auxiliary A_a(-1) = 1).  With
// ell = s*k the value equals the input block.  With require_normal the
// head-case guard is checked and GuardViolated thrown when it fails.
NFTerm right_expand(const NFTerm& t, const Nat& s, const Nat& ell, const Nat& k,
                    bool require_normal = false, const EvalBudget& budget = {});

struct LeftExpansion {
    std::vector<NFTerm> c;  // c_0 .. c_a when complete
    bool complete;
};

// Left expansion of a single-block A_a(b) with a >= 1:
//   c_0 = A_a(b-1),   c_i = A_{a-i}(A_{a-i}^{k-1}(c_{i-1}) - 1),
// each element in normal form.  Normalizing a step can require concrete
// arithmetic; when that exceeds the budget the sequence is returned as far
// as it got, with complete = false.
LeftExpansion left_expansion(const NFTerm& t, const Nat& k, const EvalBudget& budget = {});

// Normal form of value(t) - 1.  nullopt when the work exceeds the budget;
// note a present result can still be the zero term (input of value 1).
std::optional<NFTerm> predecessor(const NFTerm& t, const Nat& k, const EvalBudget& budget = {});

// Meter-sharing cores for callers composing several symbolic steps.
NFTerm predecessor_meter(const NFTerm& t, const Nat& k, BudgetMeter& meter);
std::vector<NFTerm> left_expansion_meter(const NFTerm& t, const Nat& k, BudgetMeter& meter);

}  // namespace agp
