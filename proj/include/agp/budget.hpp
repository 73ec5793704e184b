#pragma once

#include <cstdint>
#include <limits>

#include "agp/errors.hpp"
#include "agp/nat.hpp"

namespace agp {

// Caps for concrete evaluation: max_digits bounds the decimal length of any
// intermediate value, max_calls bounds the number of evaluator unfoldings.
struct EvalBudget {
    Nat max_digits = 100000;
    Nat max_calls = 10000000;
};

// Mutable per-call meter derived from an EvalBudget.  Shared by a whole
// top-level operation so that nested work draws from one pool.
class BudgetMeter {
public:
    explicit BudgetMeter(const EvalBudget& b)
        : cap_(pow10_minus_one(b.max_digits)),
          calls_left_(clamp_calls(b.max_calls)) {}

    static BudgetMeter with_cap(Nat value_cap, uint64_t calls) {
        return BudgetMeter(std::move(value_cap), calls);
    }

    // Value cap: v is in budget iff v <= cap().
    const Nat& cap() const { return cap_; }

    void tick() {
        if (calls_left_ == 0) throw BudgetExhausted{};
        --calls_left_;
        if (depth_ > kMaxDepth) throw BudgetExhausted{};
    }

    bool over(const Nat& v) const { return v > cap_; }

    void check(const Nat& v) const {
        if (v > cap_) throw BudgetExhausted{};
    }

    // Recursion depth guard; keeps runaway symbolic recursions from blowing
    // the stack before the call budget trips.
    struct DepthGuard {
        BudgetMeter& m;
        explicit DepthGuard(BudgetMeter& meter) : m(meter) {
            if (++m.depth_ > kMaxDepth) throw BudgetExhausted{};
        }
        ~DepthGuard() { --m.depth_; }
    };

private:
    static constexpr uint64_t kMaxDepth = 10000;

    BudgetMeter(Nat value_cap, uint64_t calls)
        : cap_(std::move(value_cap)), calls_left_(calls) {}

    static uint64_t clamp_calls(const Nat& n) {
        if (!n.fits_ulong_p()) return std::numeric_limits<uint64_t>::max();
        return n.get_ui();
    }

    static Nat pow10_minus_one(const Nat& digits);

    Nat cap_;
    uint64_t calls_left_;
    uint64_t depth_ = 0;
};

}  // namespace agp
