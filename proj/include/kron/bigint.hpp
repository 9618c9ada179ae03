#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kron {

// All coefficient counts, lattice-point counts and bounds are exact integers.
using BigInt = mpz_class;
using BigRat = mpq_class;

// gmpxx has no long long overloads; on LP64 long covers the range.
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

inline BigInt big_binomial(const BigInt& n, unsigned long k) {
    if (n < 0) return 0;
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

inline BigInt big_binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline BigInt big_factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

// ceil(a / b) for b > 0
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

/// Scientific notation with `digits` significant figures, rounded up
/// (away from zero), e.g. 2832139... -> "2.84e27". Upper bounds must
/// never shrink in display.
std::string sci_string_ceil(const BigInt& value, int digits = 3);

/// Parse a decimal string (optionally signed) into a BigInt.
BigInt parse_bigint(const std::string& text);

}  // namespace kron
