#include "agp/oracle.hpp"

#include "agp/errors.hpp"

namespace agp::oracle {

namespace {

const Nat& step_cap() {
    static const Nat cap = pow10(1000000) - 1;
    return cap;
}

}  // namespace

std::optional<Nat> naive_ack(const Nat& a, const Nat& k, const std::optional<Nat>& b,
                             const Nat& cap) {
    if (k < 2) throw BaseTooSmall{};
    if (!b) return Nat(1);  // A_a(-1)
    if (a == 0) {
        Nat r = 1;
        for (Nat i = 0; i < *b; ++i) {
            r *= k;
            if (r > cap) return std::nullopt;
        }
        return r;
    }
    std::optional<Nat> v = Nat(1);  // A_a(-1)
    for (Nat cur = 0; cur <= *b; ++cur) {
        for (Nat j = 0; j < k; ++j) {
            v = naive_ack(a - 1, k, v, cap);
            if (!v) return std::nullopt;  // grows with cur, so final answer too
        }
    }
    return v;
}

SandwichSeq oracle_sandwich(const Nat& m, const Nat& k) {
    if (k < 2) throw BaseTooSmall{};
    if (m == 0) throw ZeroInput{};
    SandwichSeq seq;
    seq.m = m;
    seq.k = k;
    Nat mi = 0;
    while (true) {
        Nat a = 0;
        while (true) {
            auto v = naive_ack(a + 1, k, mi, m);
            if (!v) break;
            ++a;
        }
        Nat b = mi;
        while (true) {
            auto v = naive_ack(a, k, b + 1, m);
            if (!v) break;
            ++b;
        }
        Nat v = *naive_ack(a, k, b, m);
        seq.steps.push_back({a, b, v});
        if (!naive_ack(Nat(0), k, v, m)) break;  // k^v > m
        mi = v;
    }
    return seq;
}

Nat oracle_base_change(const Nat& m, const Nat& k, const Nat& ell) {
    if (ell <= k) throw BadBases{};
    if (m == 0) return 0;
    SandwichSeq seq = oracle_sandwich(m, k);
    const SandwichStep& last = seq.steps.back();
    Nat va = oracle_base_change(last.a, k, ell);
    Nat vb = oracle_base_change(last.b, k, ell);
    auto head = naive_ack(va, ell, vb, step_cap());
    if (!head) throw Overflow("base change exceeds the value guard");
    Nat rest = oracle_base_change(m - last.m, k, ell);
    Nat out = *head + rest;
    if (out > step_cap()) throw Overflow("base change exceeds the value guard");
    return out;
}

Nat oracle_goodstein_step(const Nat& n, const Nat& k) {
    if (n == 0) throw ZeroInput{};
    return oracle_base_change(n, k, k + 1) - 1;
}

AltNF alt_normal_form(const Nat& m, const Nat& k) {
    if (k < 2) throw BaseTooSmall{};
    if (m == 0) throw ZeroInput{};
    Nat best = 0, besta = 0, bestb = 0;
    Nat a = 0;
    while (true) {
        auto base = naive_ack(a, k, Nat(0), m);
        if (!base) break;  // A_a(0) > m: higher indices only grow
        Nat b = 0;
        while (true) {
            auto v = naive_ack(a, k, b, m);
            if (!v) break;
            if (*v > best || (*v == best && a > besta)) {
                best = *v;
                besta = a;
                bestb = b;
            }
            ++b;
        }
        ++a;
    }
    return AltNF{besta, bestb, besta, bestb, m - best};
}

}  // namespace agp::oracle
