#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agp/errors.hpp"
#include "agp/nat.hpp"
#include "agp/term.hpp"  // Cmp

namespace agp {

struct OrdNode;

// Ordinal below Gamma_0 in fixed-point-free Veblen normal form.  nullptr is
// zero; a node is phi_alpha(beta) repeated coeff times plus the tail `rest`,
// with blocks weakly descending along the tail.
using OrdTerm = std::shared_ptr<const OrdNode>;

struct OrdNode {
    OrdTerm alpha;
    OrdTerm beta;
    Nat coeff;  // >= 1
    OrdTerm rest;
};

OrdTerm phi_block(OrdTerm alpha, OrdTerm beta, Nat coeff = 1, OrdTerm rest = nullptr);

// phi_0(0), the ordinal 1.
OrdTerm ord_one();

bool ord_eq(const OrdTerm& s, const OrdTerm& t);

bool ord_is_single_block(const OrdTerm& t);

// Total order on valid terms.
Cmp ord_compare(const OrdTerm& s, const OrdTerm& t);

bool ord_validate(const OrdTerm& t);

// Is lam one of the fixed points skipped by the level-alpha function, i.e. a
// single block phi_beta(gamma) with beta > alpha?
bool in_fix(const OrdTerm& alpha, const OrdTerm& lam);

// Trailing block is phi_0(0).
bool ord_is_successor(const OrdTerm& t);

// t - 1 for successor t.
OrdTerm ord_pred_successor(const OrdTerm& t);

// Canonical x-th approximant of nonzero xi; strictly below xi.
OrdTerm fund_seq(const OrdTerm& xi, const Nat& x);

struct StepdownReport {
    OrdTerm start;
    std::vector<std::pair<Nat, OrdTerm>> steps;  // (x, value after [x]); may be truncated
    bool reached_zero;
    Nat final_index;    // the x whose step reached zero (when it did)
    Nat steps_taken;
    bool strictly_decreasing;  // verified along the whole walk
};

// Iterate [2], [3], ... until zero or max_steps.  Records at most
// record_limit steps but always verifies the descent.
StepdownReport stepdown(const OrdTerm& xi, const Nat& max_steps,
                        size_t record_limit = static_cast<size_t>(-1));

enum class Reach { Holds, Fails, BudgetExceeded };

// Walks b, [k]b, [k][k]b, ...: Holds when a is reached, Fails once the walk
// drops strictly below a.  Appends the visited terms to chain when given.
Reach preceq_k_bounded(const OrdTerm& a, const OrdTerm& b, const Nat& k, const Nat& max_steps,
                       std::vector<OrdTerm>* chain = nullptr);

// gamma_0 = 0, gamma_{n+1} = phi_{gamma_n}(0).
OrdTerm gamma_n(const Nat& n);

// Grammar (whitespace-insensitive):
//   ord    := "0" | oblock ("+" oblock)*
//   oblock := "phi(" ord "," ord ")" ("*" nat)?
std::string print_ord(const OrdTerm& t);
OrdTerm parse_ord(std::string_view s);

}  // namespace agp
