#include "agp/omega.hpp"

namespace agp {

OrdTerm to_ordinal(const NFTerm& t) {
    if (!t) return nullptr;
    return phi_block(to_ordinal(t->index), to_ordinal(t->arg), t->coeff, to_ordinal(t->rest));
}

OrdTerm ordinal_of_value(const Nat& m, const Nat& k) {
    return to_ordinal(normal_form(m, k));
}

namespace {

struct OrdRun {
    OrdTerm alpha, beta;  // leading block
    Nat count;
    OrdTerm tail;
};

OrdRun ord_first_run(const OrdTerm& t) {
    OrdRun r{t->alpha, t->beta, t->coeff, t->rest};
    while (r.tail && ord_eq(r.alpha, r.tail->alpha) && ord_eq(r.beta, r.tail->beta)) {
        r.count += r.tail->coeff;
        r.tail = r.tail->rest;
    }
    return r;
}

// The image of value(t)-1 decomposes as H^p followed by the image of a
// strictly smaller predecessor problem; peel runs off lhs against that.
Cmp cmp_pred_rec(const OrdTerm& lhs, const NFTerm& t, const Nat& k, BudgetMeter& meter) {
    meter.tick();
    BudgetMeter::DepthGuard guard(meter);
    // value 1: the image of 0 is zero
    if (is_single_block(t) && !t->index && !t->arg) return lhs ? Cmp::GT : Cmp::EQ;
    if (!lhs) return Cmp::LT;  // rhs >= 1 from here on

    OrdRun lr = ord_first_run(lhs);

    if (!t->rest && t->coeff == 1 && !t->index && classify(t, k) == NFClass::CaseB) {
        // m = k^b with b the previous sandwiching value: m-1 = b*p + q where
        // p is usually astronomical; decide against a lower bound first.
        OrdTerm halpha = to_ordinal(t->arg->index);
        OrdTerm hbeta = to_ordinal(t->arg->arg);
        Cmp cb = (ord_eq(lr.alpha, halpha) && ord_eq(lr.beta, hbeta))
                     ? Cmp::EQ
                     : ord_compare(phi_block(lr.alpha, lr.beta), phi_block(halpha, hbeta));
        if (cb != Cmp::EQ) return cb;
        Nat vb = eval_term_meter(t->arg, k, meter);
        // p > count  <=  k^vb > vb*(count+1)
        auto small = pow_capped(k, vb, vb * (lr.count + 1));
        if (!small) return Cmp::LT;
        auto [p, q] = divmod(*small - 1, vb);
        if (lr.count != p) return lr.count < p ? Cmp::LT : Cmp::GT;
        return ord_compare(lr.tail, ordinal_of_value(q, k));
    }

    // Exact head run (H, p) plus a lazy continuation term.
    OrdTerm halpha, hbeta;
    Nat p;
    NFTerm cont;
    if (t->rest) {
        halpha = to_ordinal(t->index);
        hbeta = to_ordinal(t->arg);
        p = t->coeff;
        cont = t->rest;
    } else if (t->coeff > 1) {
        halpha = to_ordinal(t->index);
        hbeta = to_ordinal(t->arg);
        p = t->coeff - 1;
        cont = head_block(t);
    } else if (!t->index) {
        // k^b - 1 = k^{b-1}*(k-1) + (k^{b-1} - 1)
        NFTerm bm1 = predecessor_meter(t->arg, k, meter);
        halpha = nullptr;
        hbeta = to_ordinal(bm1);
        p = k - 1;
        cont = make_block(nullptr, bm1);
    } else {
        std::vector<NFTerm> cs = left_expansion_meter(t, k, meter);
        const NFTerm& ca = cs.back();
        halpha = to_ordinal(ca->index);
        hbeta = to_ordinal(ca->arg);
        p = k - 1;
        cont = ca;
    }
    Cmp cb = (ord_eq(lr.alpha, halpha) && ord_eq(lr.beta, hbeta))
                 ? Cmp::EQ
                 : ord_compare(phi_block(lr.alpha, lr.beta), phi_block(halpha, hbeta));
    if (cb != Cmp::EQ) return cb;
    if (lr.count != p) return lr.count < p ? Cmp::LT : Cmp::GT;
    return cmp_pred_rec(lr.tail, cont, k, meter);
}

}  // namespace

std::optional<Cmp> compare_with_pred_image(const OrdTerm& lhs, const NFTerm& t, const Nat& k,
                                           const EvalBudget& budget) {
    if (k < 2) throw BaseTooSmall{};
    if (!t) throw ZeroTerm{};
    BudgetMeter meter(budget);
    try {
        return cmp_pred_rec(lhs, t, k, meter);
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
}

}  // namespace agp
