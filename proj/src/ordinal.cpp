#include "agp/ordinal.hpp"

#include <cassert>
#include <cctype>
#include <vector>

namespace agp {

OrdTerm phi_block(OrdTerm alpha, OrdTerm beta, Nat coeff, OrdTerm rest) {
    assert(coeff >= 1);
    return std::make_shared<const OrdNode>(
        OrdNode{std::move(alpha), std::move(beta), std::move(coeff), std::move(rest)});
}

OrdTerm ord_one() {
    static const OrdTerm one = phi_block(nullptr, nullptr);
    return one;
}

bool ord_eq(const OrdTerm& s, const OrdTerm& t) {
    if (s == t) return true;
    if (!s || !t) return false;
    return s->coeff == t->coeff && ord_eq(s->alpha, t->alpha) && ord_eq(s->beta, t->beta) &&
           ord_eq(s->rest, t->rest);
}

bool ord_is_single_block(const OrdTerm& t) { return t && t->coeff == 1 && !t->rest; }

namespace {

struct Run {
    const OrdTerm* alpha;
    const OrdTerm* beta;
    Nat count;
    OrdTerm tail;
};

Run first_run(const OrdTerm& t) {
    Run r{&t->alpha, &t->beta, t->coeff, t->rest};
    while (r.tail && ord_eq(*r.alpha, r.tail->alpha) && ord_eq(*r.beta, r.tail->beta)) {
        r.count += r.tail->coeff;
        r.tail = r.tail->rest;
    }
    return r;
}

Cmp block_compare(const OrdTerm& ax, const OrdTerm& bx, const OrdTerm& ay, const OrdTerm& by) {
    if (ord_eq(ax, ay) && ord_eq(bx, by)) return Cmp::EQ;
    Cmp ca = ord_compare(ax, ay);
    if (ca == Cmp::EQ) return ord_compare(bx, by);
    if (ca == Cmp::LT) {
        Cmp d = ord_compare(bx, phi_block(ay, by));
        return d == Cmp::LT ? Cmp::LT : Cmp::GT;
    }
    Cmp d = ord_compare(by, phi_block(ax, bx));
    return d == Cmp::LT ? Cmp::GT : Cmp::LT;
}

}  // namespace

Cmp ord_compare(const OrdTerm& s, const OrdTerm& t) {
    if (!s && !t) return Cmp::EQ;
    if (!s) return Cmp::LT;
    if (!t) return Cmp::GT;
    Run rs = first_run(s);
    Run rt = first_run(t);
    Cmp cb = block_compare(*rs.alpha, *rs.beta, *rt.alpha, *rt.beta);
    if (cb != Cmp::EQ) return cb;
    if (rs.count != rt.count) return rs.count < rt.count ? Cmp::LT : Cmp::GT;
    return ord_compare(rs.tail, rt.tail);
}

bool ord_validate(const OrdTerm& t) {
    if (!t) return true;
    if (t->coeff < 1) return false;
    if (!ord_validate(t->alpha) || !ord_validate(t->beta)) return false;
    if (t->rest) {
        if (!ord_validate(t->rest)) return false;
        // weakly descending blocks
        Cmp c = block_compare(t->alpha, t->beta, t->rest->alpha, t->rest->beta);
        if (c == Cmp::LT) return false;
    }
    return true;
}

bool in_fix(const OrdTerm& alpha, const OrdTerm& lam) {
    if (!ord_is_single_block(lam)) return false;
    return ord_compare(lam->alpha, alpha) == Cmp::GT;
}

bool ord_is_successor(const OrdTerm& t) {
    if (!t) return false;
    const OrdNode* cur = t.get();
    while (cur->rest) cur = cur->rest.get();
    return !cur->alpha && !cur->beta;
}

OrdTerm ord_pred_successor(const OrdTerm& t) {
    assert(ord_is_successor(t));
    if (!t->rest) {
        if (t->coeff > 1) return phi_block(t->alpha, t->beta, t->coeff - 1);
        return nullptr;
    }
    return phi_block(t->alpha, t->beta, t->coeff, ord_pred_successor(t->rest));
}

namespace {

OrdTerm iter_phi(const OrdTerm& index, const Nat& times, OrdTerm seed) {
    OrdTerm out = std::move(seed);
    for (Nat i = 0; i < times; ++i) out = phi_block(index, out);
    return out;
}

// Level-0 block on a successor argument; the rule list leaves this spot
// open, filled to match the base-omega warm-up clause.
OrdTerm fs_phi0_successor(const OrdTerm& beta, const Nat& x) {
    return phi_block(nullptr, ord_pred_successor(beta), x);
}

}  // namespace

OrdTerm fund_seq(const OrdTerm& xi, const Nat& x) {
    if (!xi) throw ZeroHasNoFS{};
    if (x < 1) throw NotApplicable("fundamental sequence index must be >= 1");
    if (xi->rest)
        return phi_block(xi->alpha, xi->beta, xi->coeff, fund_seq(xi->rest, x));
    if (xi->coeff > 1)
        return phi_block(xi->alpha, xi->beta, xi->coeff - 1,
                         fund_seq(phi_block(xi->alpha, xi->beta), x));
    const OrdTerm& alpha = xi->alpha;
    const OrdTerm& beta = xi->beta;
    if (!alpha) {
        if (!beta) return nullptr;                                     // [x]1 = 0
        if (in_fix(nullptr, beta))
            return phi_block(beta->alpha, beta->beta, x);              // lambda * x
        if (ord_is_successor(beta)) return fs_phi0_successor(beta, x);
        return phi_block(nullptr, fund_seq(beta, x));                  // limit argument
    }
    Nat xhat = ord_is_successor(alpha) ? x : Nat(1);
    if (!beta) return iter_phi(fund_seq(alpha, x), xhat, ord_one());
    if (in_fix(alpha, beta)) return iter_phi(fund_seq(alpha, x), xhat, beta);
    if (ord_is_successor(beta))
        return iter_phi(fund_seq(alpha, x), xhat, phi_block(alpha, ord_pred_successor(beta)));
    return phi_block(alpha, fund_seq(beta, x));
}

StepdownReport stepdown(const OrdTerm& xi, const Nat& max_steps, size_t record_limit) {
    StepdownReport rep{xi, {}, false, 0, 0, true};
    OrdTerm cur = xi;
    Nat x = 2;
    while (cur && rep.steps_taken < max_steps) {
        OrdTerm nxt = fund_seq(cur, x);
        if (ord_compare(nxt, cur) != Cmp::LT) rep.strictly_decreasing = false;
        if (rep.steps.size() < record_limit) rep.steps.emplace_back(x, nxt);
        cur = nxt;
        rep.steps_taken += 1;
        if (!cur) {
            rep.reached_zero = true;
            rep.final_index = x;
        }
        x += 1;
    }
    return rep;
}

Reach preceq_k_bounded(const OrdTerm& a, const OrdTerm& b, const Nat& k, const Nat& max_steps,
                       std::vector<OrdTerm>* chain) {
    OrdTerm cur = b;
    if (chain) chain->push_back(cur);
    Nat steps = 0;
    while (true) {
        Cmp c = ord_compare(cur, a);
        if (c == Cmp::EQ) return Reach::Holds;
        if (c == Cmp::LT) return Reach::Fails;
        if (steps >= max_steps) return Reach::BudgetExceeded;
        cur = fund_seq(cur, k);  // cur > a >= 0, so nonzero
        if (chain) chain->push_back(cur);
        steps += 1;
    }
}

OrdTerm gamma_n(const Nat& n) {
    OrdTerm t = nullptr;
    for (Nat i = 0; i < n; ++i) t = phi_block(t, nullptr);
    return t;
}

std::string print_ord(const OrdTerm& t) {
    if (!t) return "0";
    std::string out;
    const OrdNode* cur = t.get();
    while (true) {
        out += "phi(";
        out += print_ord(cur->alpha);
        out += ",";
        out += print_ord(cur->beta);
        out += ")";
        if (cur->coeff != 1) {
            out += "*";
            out += nat_str(cur->coeff);
        }
        if (!cur->rest) break;
        out += "+";
        cur = cur->rest.get();
    }
    return out;
}

namespace {

struct OrdParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw SyntaxError(pos, std::string("expected '") + c + "'");
    }

    Nat number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw SyntaxError(pos, "expected a number");
        return Nat(std::string(s.substr(start, pos - start)), 10);
    }

    struct Piece {
        OrdTerm alpha, beta;
        Nat coeff;
    };

    OrdTerm term() {
        skip_ws();
        if (pos < s.size() && s[pos] == '0') {
            ++pos;
            return nullptr;
        }
        std::vector<Piece> pieces;
        pieces.push_back(block());
        while (eat('+')) pieces.push_back(block());
        OrdTerm out = nullptr;
        for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
            out = phi_block(std::move(it->alpha), std::move(it->beta), std::move(it->coeff),
                            std::move(out));
        return out;
    }

    Piece block() {
        skip_ws();
        if (s.substr(pos, 4) != "phi(")
            throw SyntaxError(pos, "expected 'phi(' or '0'");
        pos += 4;
        OrdTerm alpha = term();
        expect(',');
        OrdTerm beta = term();
        expect(')');
        Nat coeff = 1;
        if (eat('*')) {
            size_t at = pos;
            coeff = number();
            if (coeff < 1) throw SyntaxError(at, "coefficient must be at least 1");
        }
        return {std::move(alpha), std::move(beta), std::move(coeff)};
    }
};

}  // namespace

OrdTerm parse_ord(std::string_view s) {
    OrdParser p{s};
    OrdTerm t = p.term();
    p.skip_ws();
    if (p.pos != s.size()) throw SyntaxError(p.pos, "trailing input");
    return t;
}

}  // namespace agp
