#include "agp/term.hpp"

#include <cassert>
#include <cctype>
#include <vector>

namespace agp {

NFTerm make_block(NFTerm index, NFTerm arg, Nat coeff, NFTerm rest) {
    assert(coeff >= 1);
    return std::make_shared<const TermNode>(
        TermNode{std::move(index), std::move(arg), std::move(coeff), std::move(rest)});
}

NFTerm one_term() {
    static const NFTerm one = make_block(nullptr, nullptr);
    return one;
}

bool is_zero(const NFTerm& t) { return t == nullptr; }

bool is_single_block(const NFTerm& t) {
    return t && t->coeff == 1 && !t->rest;
}

NFTerm head_block(const NFTerm& t) {
    if (!t) throw ZeroTerm{};
    if (is_single_block(t)) return t;
    return make_block(t->index, t->arg, 1, nullptr);
}

bool term_eq(const NFTerm& s, const NFTerm& t) {
    if (s == t) return true;
    if (!s || !t) return false;
    return s->coeff == t->coeff && term_eq(s->index, t->index) && term_eq(s->arg, t->arg) &&
           term_eq(s->rest, t->rest);
}

namespace {

// Run decomposition: the leading maximal group of equal blocks.
struct Run {
    const NFTerm* index;
    const NFTerm* arg;
    Nat count;
    NFTerm tail;
};

Run first_run(const NFTerm& t) {
    Run r{&t->index, &t->arg, t->coeff, t->rest};
    while (r.tail && term_eq(*r.index, r.tail->index) && term_eq(*r.arg, r.tail->arg)) {
        r.count += r.tail->coeff;
        r.tail = r.tail->rest;
    }
    return r;
}

Cmp block_compare(const NFTerm& ix, const NFTerm& ax, const NFTerm& iy, const NFTerm& ay) {
    if (term_eq(ix, iy) && term_eq(ax, ay)) return Cmp::EQ;
    Cmp ci = nf_compare(ix, iy);
    if (ci == Cmp::EQ) return nf_compare(ax, ay);
    if (ci == Cmp::LT) {
        // A_ix(ax) < A_iy(ay) iff ax < A_iy(ay); otherwise the left side
        // strictly dominates the right via its argument.
        Cmp d = nf_compare(ax, make_block(iy, ay));
        return d == Cmp::LT ? Cmp::LT : Cmp::GT;
    }
    Cmp d = nf_compare(ay, make_block(ix, ax));
    return d == Cmp::LT ? Cmp::GT : Cmp::LT;
}

}  // namespace

Cmp nf_compare(const NFTerm& s, const NFTerm& t) {
    if (!s && !t) return Cmp::EQ;
    if (!s) return Cmp::LT;
    if (!t) return Cmp::GT;
    Run rs = first_run(s);
    Run rt = first_run(t);
    Cmp cb = block_compare(*rs.index, *rs.arg, *rt.index, *rt.arg);
    if (cb != Cmp::EQ) return cb;
    if (rs.count != rt.count) return rs.count < rt.count ? Cmp::LT : Cmp::GT;
    return nf_compare(rs.tail, rt.tail);
}

Nat term_norm(const NFTerm& t) {
    if (!t) return Nat(1);
    return t->coeff * (term_norm(t->index) + term_norm(t->arg)) + term_norm(t->rest);
}

size_t term_size(const NFTerm& t) {
    if (!t) return 0;
    return 1 + term_size(t->index) + term_size(t->arg) + term_size(t->rest);
}

std::string print_term(const NFTerm& t) {
    if (!t) return "0";
    std::string out;
    const TermNode* cur = t.get();
    while (true) {
        out += "A(";
        out += print_term(cur->index);
        out += ",";
        out += print_term(cur->arg);
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

struct Parser {
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
        NFTerm index, arg;
        Nat coeff;
    };

    NFTerm term() {
        skip_ws();
        if (pos < s.size() && s[pos] == '0') {
            ++pos;
            return nullptr;
        }
        std::vector<Piece> pieces;
        pieces.push_back(block());
        while (eat('+')) pieces.push_back(block());
        NFTerm out = nullptr;
        for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
            out = make_block(std::move(it->index), std::move(it->arg), std::move(it->coeff),
                             std::move(out));
        return out;
    }

    Piece block() {
        skip_ws();
        if (pos >= s.size() || s[pos] != 'A')
            throw SyntaxError(pos, "expected 'A(' or '0'");
        ++pos;
        expect('(');
        NFTerm index = term();
        expect(',');
        NFTerm arg = term();
        expect(')');
        Nat coeff = 1;
        if (eat('*')) {
            size_t at = pos;
            coeff = number();
            if (coeff < 1) throw SyntaxError(at, "coefficient must be at least 1");
        }
        return {std::move(index), std::move(arg), std::move(coeff)};
    }
};

}  // namespace

NFTerm parse_term(std::string_view s) {
    Parser p{s};
    NFTerm t = p.term();
    p.skip_ws();
    if (p.pos != s.size()) throw SyntaxError(p.pos, "trailing input");
    return t;
}

}  // namespace agp
