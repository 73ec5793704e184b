#include "agp/normal_form.hpp"

#include <cassert>

namespace agp {

namespace {

bool ack_leq(const Nat& a, const Nat& k, const Nat& b, const Nat& t) {
    return ack_cmp_threshold(a, k, Nat(b), t).has_value();
}

// Largest b >= lo with A_a(k, b) <= m, given A_a(k, lo) <= m.  Gallops past
// the answer, then bisects.  Returns the argument and the exact value.
std::pair<Nat, Nat> max_arg(const Nat& a, const Nat& k, const Nat& lo, const Nat& m) {
    if (a == 0) {
        Nat b = floor_log(m, k);
        return {b, pow_nat(k, to_ulong(b))};
    }
    Nat step = 1;
    Nat good = lo;
    Nat bad;  // first known argument with value > m, once found
    bool have_bad = false;
    while (!have_bad) {
        Nat cand = good + step;
        if (ack_leq(a, k, cand, m)) {
            good = cand;
            step *= 2;
        } else {
            bad = cand;
            have_bad = true;
        }
    }
    while (good + 1 < bad) {
        Nat mid = (good + bad) / 2;
        if (ack_leq(a, k, mid, m))
            good = mid;
        else
            bad = mid;
    }
    Nat v = *ack_cmp_threshold(a, k, Nat(good), m);
    return {good, v};
}

}  // namespace

SandwichSeq sandwich(const Nat& m, const Nat& k) {
    if (k < 2) throw BaseTooSmall{};
    if (m == 0) throw ZeroInput{};
    SandwichSeq seq;
    seq.m = m;
    seq.k = k;
    Nat mi = 0;
    while (true) {
        // invariant: A_0(k, mi) <= m, so the next index exists
        Nat a = 0;
        while (ack_leq(a + 1, k, mi, m)) ++a;
        auto [b, v] = max_arg(a, k, mi, m);
        seq.steps.push_back({a, b, v});
        if (!pow_capped(k, v, m)) break;  // k^v > m: done
        mi = v;
    }
    return seq;
}

NFTerm normal_form(const Nat& m, const Nat& k) {
    if (k < 2) throw BaseTooSmall{};
    if (m == 0) return nullptr;
    SandwichSeq seq = sandwich(m, k);
    const SandwichStep& last = seq.steps.back();
    NFTerm index = normal_form(last.a, k);
    NFTerm arg = normal_form(last.b, k);
    NFTerm rest = normal_form(m - last.m, k);
    if (rest && term_eq(rest->index, index) && term_eq(rest->arg, arg))
        return make_block(index, arg, rest->coeff + 1, rest->rest);
    return make_block(index, arg, 1, rest);
}

Nat eval_term_meter(const NFTerm& t, const Nat& k, BudgetMeter& meter) {
    if (!t) return Nat(0);
    BudgetMeter::DepthGuard guard(meter);
    Nat va = eval_term_meter(t->index, k, meter);
    Nat vb = eval_term_meter(t->arg, k, meter);
    Nat head = ack_eval_meter(va, k, ArgOrMinusOne(vb), meter);
    Nat total = head * t->coeff;
    meter.check(total);
    total += eval_term_meter(t->rest, k, meter);
    meter.check(total);
    return total;
}

BoundedNat eval_term(const NFTerm& t, const Nat& k, const EvalBudget& budget) {
    if (k < 2) throw BaseTooSmall{};
    BudgetMeter meter(budget);
    try {
        return eval_term_meter(t, k, meter);
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
}

ValidateResult validate_nf(const NFTerm& t, const Nat& k, const EvalBudget& budget) {
    if (k < 2) throw BaseTooSmall{};
    BoundedNat v = eval_term(t, k, budget);
    if (!v) return {Validity::Exceeded, ""};
    NFTerm canonical = normal_form(*v, k);
    if (term_eq(canonical, t)) return {Validity::Valid, ""};
    return {Validity::Invalid, "value " + nat_str(*v) + " has normal form " +
                                   print_term(canonical) + ", not " + print_term(t)};
}

NFClass classify(const NFTerm& t, const Nat& k) {
    if (k < 2) throw BaseTooSmall{};
    if (!t) throw ZeroTerm{};
    if (!t->arg) return NFClass::CaseA;
    if (is_single_block(t->arg) && nf_compare(t->arg->index, t->index) == Cmp::GT)
        return NFClass::CaseB;
    return NFClass::CaseC;
}

NFTerm base_change(const NFTerm& t, const Nat& k, const Nat& ell) {
    if (k < 2) throw BaseTooSmall{};
    if (ell <= k) throw BadBases{};
    if (!t) return nullptr;
    return make_block(base_change(t->index, k, ell), base_change(t->arg, k, ell), t->coeff,
                      base_change(t->rest, k, ell));
}

}  // namespace agp
