#include "agp/expansion.hpp"

#include <cassert>

namespace agp {

NFTerm wrap_blocks(const NFTerm& index, const Nat& times, NFTerm seed) {
    NFTerm out = std::move(seed);
    for (Nat i = 0; i < times; ++i) out = make_block(index, out);
    return out;
}

namespace {

// c_0 of a left expansion when the argument equals the previous sandwiching
// value: A_a(b-1) unfolds through level a-1 until the inner value drops to
// b or below, and the remaining applications stay normal.
NFTerm case_b_c0(const NFTerm& t, const Nat& va, const Nat& k, BudgetMeter& meter) {
    Nat vb = eval_term_meter(t->arg, k, meter);
    // largest y >= -1 with A_a(k, y) <= vb; y = -1 always qualifies
    std::optional<Nat> ystar;
    if (ack_cmp_threshold(va, k, Nat(0), vb)) {
        Nat good = 0, step = 1;
        std::optional<Nat> bad;
        while (!bad) {
            Nat cand = good + step;
            if (ack_cmp_threshold(va, k, cand, vb)) {
                good = cand;
                step *= 2;
            } else {
                bad = cand;
            }
        }
        while (good + 1 < *bad) {
            Nat mid = (good + *bad) / 2;
            if (ack_cmp_threshold(va, k, mid, vb))
                good = mid;
            else
                *bad = mid;
        }
        ystar = good;
    }
    Nat tprime = ystar ? Nat(vb - *ystar) : Nat(vb + 1);  // in [2, b+1]
    Nat base = ystar ? *ack_cmp_threshold(va, k, *ystar, vb) : Nat(1);
    // greatest r < k keeping A_{a-1}^r of the base at or below vb
    Nat r = 0;
    Nat cur = base;
    while (r + 1 < k) {
        auto nxt = ack_cmp_threshold(va - 1, k, cur, vb);
        if (!nxt) break;
        cur = *nxt;
        ++r;
    }
    Nat wraps = k * (tprime - 1) - r;
    NFTerm idxm1 = normal_form(va - 1, k);
    NFTerm out = normal_form(cur, k);
    for (Nat w = 0; w < wraps; ++w) {
        meter.tick();
        out = make_block(idxm1, out);
    }
    return out;
}

}  // namespace

std::vector<NFTerm> left_expansion_meter(const NFTerm& t, const Nat& k, BudgetMeter& meter) {
    if (!t) throw ZeroTerm{};
    if (!is_single_block(t)) throw NotApplicable("left expansion needs a single head block");
    if (!t->index) throw NotApplicable("left expansion needs head index >= 1");
    BudgetMeter::DepthGuard guard(meter);
    Nat va = eval_term_meter(t->index, k, meter);
    std::vector<NFTerm> cs;
    if (!t->arg) {
        cs.push_back(one_term());  // A_a(-1) = 1
    } else if (classify(t, k) == NFClass::CaseB) {
        cs.push_back(case_b_c0(t, va, k, meter));
    } else {
        cs.push_back(make_block(t->index, predecessor_meter(t->arg, k, meter)));
    }
    for (Nat i = 1; i <= va; ++i) {
        NFTerm idx = normal_form(va - i, k);
        NFTerm inner = cs.back();
        for (Nat j = 1; j < k; ++j) {
            meter.tick();
            inner = make_block(idx, inner);
        }
        NFTerm im1 = predecessor_meter(inner, k, meter);
        cs.push_back(make_block(idx, im1));
    }
    return cs;
}

LeftExpansion left_expansion(const NFTerm& t, const Nat& k, const EvalBudget& budget) {
    if (k < 2) throw BaseTooSmall{};
    BudgetMeter meter(budget);
    LeftExpansion out{{}, true};
    // Re-run prefix-by-prefix on failure so callers see how far it got.
    try {
        out.c = left_expansion_meter(t, k, meter);
        return out;
    } catch (const BudgetExhausted&) {
        out.complete = false;
    }
    // Recover the longest computable prefix.
    Nat va;
    try {
        BudgetMeter m2(budget);
        va = eval_term_meter(t->index, k, m2);
    } catch (const BudgetExhausted&) {
        return out;
    }
    for (Nat upto = 0; upto <= va; ++upto) {
        try {
            BudgetMeter m2(budget);
            std::vector<NFTerm> cs;
            if (!t->arg)
                cs.push_back(one_term());
            else if (classify(t, k) == NFClass::CaseB)
                cs.push_back(case_b_c0(t, va, k, m2));
            else
                cs.push_back(make_block(t->index, predecessor_meter(t->arg, k, m2)));
            for (Nat i = 1; i <= upto; ++i) {
                NFTerm idx = normal_form(va - i, k);
                NFTerm inner = cs.back();
                for (Nat j = 1; j < k; ++j) {
                    m2.tick();
                    inner = make_block(idx, inner);
                }
                cs.push_back(make_block(idx, predecessor_meter(inner, k, m2)));
            }
            out.c = cs;
        } catch (const BudgetExhausted&) {
            break;
        }
    }
    return out;
}

NFTerm predecessor_meter(const NFTerm& t, const Nat& k, BudgetMeter& meter) {
    if (!t) throw ZeroTerm{};
    meter.tick();
    BudgetMeter::DepthGuard guard(meter);
    if (t->rest)
        return make_block(t->index, t->arg, t->coeff, predecessor_meter(t->rest, k, meter));
    if (t->coeff > 1)
        return make_block(t->index, t->arg, t->coeff - 1,
                          predecessor_meter(head_block(t), k, meter));
    if (!t->index) {
        if (!t->arg) return nullptr;  // 1 - 1 = 0
        if (classify(t, k) == NFClass::CaseB) {
            // m = k^b with b the previous sandwiching value: divide out b.
            Nat vb = eval_term_meter(t->arg, k, meter);
            auto kb = pow_capped(k, vb, meter.cap());
            if (!kb) throw BudgetExhausted{};
            auto [p, q] = divmod(*kb - 1, vb);
            return make_block(t->arg->index, t->arg->arg, p, normal_form(q, k));
        }
        // k^b - 1 = k^{b-1}*(k-1) + (k^{b-1} - 1)
        NFTerm bm1 = predecessor_meter(t->arg, k, meter);
        NFTerm tail = predecessor_meter(make_block(nullptr, bm1), k, meter);
        return make_block(nullptr, bm1, k - 1, tail);
    }
    // head index >= 1: unfold on the left, then m-1 = c_a*(k-1) + (c_a - 1)
    std::vector<NFTerm> cs = left_expansion_meter(t, k, meter);
    const NFTerm& ca = cs.back();
    return make_block(ca->index, ca->arg, k - 1, predecessor_meter(ca, k, meter));
}

std::optional<NFTerm> predecessor(const NFTerm& t, const Nat& k, const EvalBudget& budget) {
    if (k < 2) throw BaseTooSmall{};
    if (!t) throw ZeroTerm{};
    BudgetMeter meter(budget);
    try {
        return predecessor_meter(t, k, meter);
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
}

NFTerm right_expand(const NFTerm& t, const Nat& s, const Nat& ell, const Nat& k,
                    bool require_normal, const EvalBudget& budget) {
    if (k < 2) throw BaseTooSmall{};
    if (!t) throw ZeroTerm{};
    if (!is_single_block(t) || !t->index)
        throw NotApplicable("right expansion needs a single block with head index >= 1");
    if (s < 1) throw NotApplicable("shift must be at least 1");
    if (ell < 1 || ell > s * k) throw NotApplicable("application count out of range");
    BudgetMeter meter(budget);
    // compare s with b + 1 structurally: s - 1 vs b
    NFTerm sm1 = normal_form(s - 1, k);
    Cmp c = nf_compare(sm1, t->arg);
    if (c == Cmp::GT) throw NotApplicable("shift exceeds argument + 1");
    NFTerm inner;
    if (c == Cmp::EQ) {
        inner = one_term();  // A_a(-1) = 1
    } else {
        NFTerm arg = t->arg;
        for (Nat i = 0; i < s; ++i) arg = predecessor_meter(arg, k, meter);
        inner = make_block(t->index, arg);
    }
    NFTerm idxm1 = predecessor_meter(t->index, k, meter);
    NFTerm out = wrap_blocks(idxm1, ell, inner);
    if (require_normal) {
        if (classify(t, k) != NFClass::CaseB) throw GuardViolated{};
        if (ell >= s * k) throw GuardViolated{};  // value would reach A_a(b)
        // lower end: A_{a-1}^{ell-1}(A_a(b-s)) >= b
        Nat vb = eval_term_meter(t->arg, k, meter);
        NFTerm lhs = wrap_blocks(idxm1, ell - 1, inner);
        BudgetMeter probe = BudgetMeter::with_cap(vb, 1u << 24);
        bool ge;
        try {
            Nat v = eval_term_meter(lhs, k, probe);
            ge = (v == vb);
        } catch (const BudgetExhausted&) {
            ge = true;  // exceeds vb, so certainly >= b
        }
        if (!ge) throw GuardViolated{};
    }
    return out;
}

}  // namespace agp
