#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace agp {

// Unbounded non-negative integer.  All arithmetic is exact; callers keep the
// non-negativity invariant (subtractions are guarded at the call sites).
using Nat = mpz_class;

inline bool fits_ulong(const Nat& n) { return n.fits_ulong_p(); }

inline unsigned long to_ulong(const Nat& n) { return n.get_ui(); }

// Exact k^e for machine-size e.
inline Nat pow_nat(const Nat& k, unsigned long e) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), k.get_mpz_t(), e);
    return r;
}

Nat pow10(unsigned long e);

// Number of bits of n (exact); 0 has zero bits.
inline unsigned long bit_length(const Nat& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

// k^e when it is <= cap, nullopt otherwise.  Exact in both directions.
// Requires k >= 2.
std::optional<Nat> pow_capped(const Nat& k, const Nat& e, const Nat& cap);

// Largest e with k^e <= m.  Requires m >= 1, k >= 2.
Nat floor_log(const Nat& m, const Nat& k);

inline std::pair<Nat, Nat> divmod(const Nat& a, const Nat& b) {
    Nat q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
}

// Does the power tower 2^2^...^2 of height `levels` exceed t?
// Decided via iterated exact base-2 logarithms.
bool tower2_exceeds(Nat levels, Nat t);

inline std::string nat_str(const Nat& n) { return n.get_str(); }

// Parses a decimal string; rejects signs and garbage.
std::optional<Nat> parse_nat(const std::string& s);

}  // namespace agp
