#include "agp/nat.hpp"

#include <cassert>
#include <map>
#include <mutex>

#include "agp/budget.hpp"

namespace agp {

Nat pow10(unsigned long e) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

std::optional<Nat> pow_capped(const Nat& k, const Nat& e, const Nat& cap) {
    assert(k >= 2);
    if (e == 0) {
        if (cap < 1) return std::nullopt;
        return Nat(1);
    }
    // k^e >= 2^e, and 2^bits(cap) > cap, so large exponents are out already.
    if (e >= Nat(bit_length(cap))) return std::nullopt;
    Nat r = pow_nat(k, to_ulong(e));
    if (r > cap) return std::nullopt;
    return r;
}

Nat floor_log(const Nat& m, const Nat& k) {
    assert(m >= 1 && k >= 2);
    if (k.fits_ulong_p() && to_ulong(k) <= 62) {
        // sizeinbase may overshoot by one; verify and adjust.
        unsigned long d = mpz_sizeinbase(m.get_mpz_t(), static_cast<int>(to_ulong(k)));
        Nat e(d - 1);
        while (e > 0 && !pow_capped(k, e, m)) --e;
        return e;
    }
    // Generic ladder: square up, then binary descent.
    if (k > m) return Nat(0);
    Nat lo = 1, hi = 2;  // k^lo <= m invariant
    while (pow_capped(k, hi, m)) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        Nat mid = (lo + hi) / 2;
        if (pow_capped(k, mid, m))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

bool tower2_exceeds(Nat levels, Nat t) {
    // Tower T(0) = 1, T(n+1) = 2^T(n).  T(L) > t iff T(L-1) > floor(log2 t).
    while (true) {
        if (t == 0) return true;
        if (levels == 0) return false;  // T(0) = 1 <= t
        t = Nat(bit_length(t)) - 1;
        levels -= 1;
    }
}

std::optional<Nat> parse_nat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    for (char c : s)
        if (c < '0' || c > '9') return std::nullopt;
    return Nat(s, 10);
}

Nat BudgetMeter::pow10_minus_one(const Nat& digits) {
    static std::mutex mu;
    static std::map<unsigned long, Nat> cache;
    assert(digits >= 1 && digits.fits_ulong_p());
    unsigned long d = to_ulong(digits);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, pow10(d) - 1).first;
    return it->second;
}

}  // namespace agp
