#pragma once

#include <optional>

#include "agp/expansion.hpp"
#include "agp/normal_form.hpp"
#include "agp/ordinal.hpp"

namespace agp {

// Base-omega image: block A_a(b) becomes phi_{image(a)}(image(b)), keeping
// coefficients.  Images of normal forms are valid ordinal terms.
OrdTerm to_ordinal(const NFTerm& t);

// to_ordinal(normal_form(m, k)).
OrdTerm ordinal_of_value(const Nat& m, const Nat& k);

// ord_compare(lhs, base-omega image of value(t) - 1) for a base-k normal t of
// positive value, computed lazily: the image can have astronomically many
// blocks, but each comparison is settled from a bounded prefix.  nullopt when
// the prefix work itself exceeds the budget.
std::optional<Cmp> compare_with_pred_image(const OrdTerm& lhs, const NFTerm& t, const Nat& k,
                                           const EvalBudget& budget = {});

}  // namespace agp
