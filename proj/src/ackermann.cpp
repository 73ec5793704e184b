#include "agp/ackermann.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace agp {

namespace {

// Exact values A_a(k,b), keyed (k, a, b+1) so the -1 sentinel fits at 0.
// Only fully evaluated results are stored, so entries are cap-independent.
struct Cache {
    std::map<std::tuple<Nat, Nat, Nat>, Nat> map;
    std::shared_mutex mu;
};

Cache& cache() {
    static Cache c;
    return c;
}

std::optional<std::pair<Nat, Nat>> cache_floor(const Nat& k, const Nat& a, const Nat& bp1) {
    // Largest memoized argument b' with b'+1 <= bp1 at level (k, a).
    std::shared_lock lock(cache().mu);
    auto& m = cache().map;
    auto it = m.upper_bound(std::make_tuple(k, a, bp1));
    if (it == m.begin()) return std::nullopt;
    --it;
    const auto& [kk, aa, bb1] = it->first;
    if (kk != k || aa != a) return std::nullopt;
    return std::make_pair(bb1, it->second);
}

void cache_store(const Nat& k, const Nat& a, const Nat& bp1, const Nat& v) {
    std::unique_lock lock(cache().mu);
    cache().map.emplace(std::make_tuple(k, a, bp1), v);
}

// Core evaluator: A_a(k, b) if it is <= cap, nullopt otherwise.  The result
// dominates every intermediate, so any intermediate above cap settles the
// answer.  `meter` (when present) charges one call per application request.
std::optional<Nat> core(const Nat& a, const Nat& k, const std::optional<Nat>& b,
                        const Nat& cap, BudgetMeter* meter) {
    if (meter) meter->tick();
    if (!b) {
        if (cap < 1) return std::nullopt;
        return Nat(1);  // A_a(-1)
    }
    const Nat& bn = *b;
    // A_a(k,b) > max{a, b}
    if (a >= cap || bn >= cap) {
        if (a == 0 && bn == 0 && cap >= 1) return Nat(1);  // k^0 = 1
        return std::nullopt;
    }
    if (a == 0) return pow_capped(k, bn, cap);
    // A_a(k,b) >= 2^2^...^2 (a+1 twos) for b >= 0
    if (tower2_exceeds(a + 1, cap)) return std::nullopt;

    Nat cur = 0;       // next argument to fill in at this level
    Nat v = 1;         // A_a(cur - 1)
    if (auto hit = cache_floor(k, a, bn + 1)) {
        auto& [bp1, val] = *hit;
        if (val > cap) return std::nullopt;  // monotone in b
        if (bp1 == bn + 1) return val;
        cur = bp1;  // == b'+1
        v = val;
    }
    for (; cur <= bn; ++cur) {
        for (Nat j = 0; j < k; ++j) {
            auto r = core(a - 1, k, v, cap, meter);
            if (!r) return std::nullopt;
            v = std::move(*r);
        }
        cache_store(k, a, cur + 1, v);
    }
    return v;
}

void require_base(const Nat& k) {
    if (k < 2) throw BaseTooSmall{};
}

}  // namespace

BoundedNat ack_eval(const Nat& a, const Nat& k, const ArgOrMinusOne& b,
                    const EvalBudget& budget) {
    require_base(k);
    BudgetMeter meter(budget);
    try {
        return core(a, k, b.v, meter.cap(), &meter);
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
}

Nat ack_eval_meter(const Nat& a, const Nat& k, const ArgOrMinusOne& b, BudgetMeter& meter) {
    require_base(k);
    auto r = core(a, k, b.v, meter.cap(), &meter);
    if (!r) throw BudgetExhausted{};
    return *r;
}

ThresholdResult ack_cmp_threshold(const Nat& a, const Nat& k, const ArgOrMinusOne& b,
                                  const Nat& t) {
    require_base(k);
    return core(a, k, b.v, t, nullptr);
}

BoundedNat ack_iter(const Nat& a, const Nat& k, const ArgOrMinusOne& b, const Nat& j,
                    const EvalBudget& budget) {
    require_base(k);
    if (j == 0) {
        if (b.is_minus_one()) throw IterZeroOnSentinel{};
        return *b.v;
    }
    BudgetMeter meter(budget);
    try {
        std::optional<Nat> arg = b.v;
        Nat v;
        for (Nat i = 0; i < j; ++i) {
            auto r = core(a, k, arg, meter.cap(), &meter);
            if (!r) return std::nullopt;  // iterates only grow
            v = std::move(*r);
            arg = v;
        }
        return v;
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
}

void ack_cache_clear() {
    std::unique_lock lock(cache().mu);
    cache().map.clear();
}

}  // namespace agp
