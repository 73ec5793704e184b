#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "agp/errors.hpp"
#include "agp/nat.hpp"

namespace agp {

struct TermNode;

// Hereditary Ackermann term.  nullptr is the zero term; a node is the block
// A_index(arg) repeated coeff times, followed by the additive tail `rest`.
using NFTerm = std::shared_ptr<const TermNode>;

struct TermNode {
    NFTerm index;
    NFTerm arg;
    Nat coeff;  // >= 1
    NFTerm rest;
};

NFTerm make_block(NFTerm index, NFTerm arg, Nat coeff = 1, NFTerm rest = nullptr);

// The term A(0,0), value 1 at every base.
NFTerm one_term();

bool term_eq(const NFTerm& s, const NFTerm& t);

bool is_zero(const NFTerm& t);

// Single block: coeff 1 and empty tail.
bool is_single_block(const NFTerm& t);

// Head block of t as a standalone single-coefficient term.
NFTerm head_block(const NFTerm& t);

enum class Cmp { LT, EQ, GT };

// Value order on normal-form terms of a common base.  Implements the
// head-index/argument recursion; correct only when both inputs are valid
// normal forms for the same base.
Cmp nf_compare(const NFTerm& s, const NFTerm& t);

// Syntactic size: the zero term counts 1, a block counts index plus argument
// (repeated coeff times) plus its tail.
Nat term_norm(const NFTerm& t);

// Grammar (whitespace-insensitive):
//   term  := "0" | block ("+" block)*
//   block := "A(" term "," term ")" ("*" nat)?
//   nat   := decimal, >= 1 for coefficients
std::string print_term(const NFTerm& t);
NFTerm parse_term(std::string_view s);

// Number of nodes (ignoring sharing); cheap structural measure for tests.
size_t term_size(const NFTerm& t);

}  // namespace agp
