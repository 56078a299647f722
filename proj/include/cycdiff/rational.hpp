/* Exact integer and rational arithmetic helpers.
 *
 * Everything downstream (Boseck invariants, divisor degrees, genus
 * computations) is integer/rational combinatorics where the floor and
 * fractional-part operators must be exact on negatives; nothing in the
 * library touches floating point.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace cycdiff {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* cpp_int division truncates toward zero; we need floors. */
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline long long floor_div_ll(long long a, long long b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/* Nonnegative remainder, r in [0, |b|). */
inline long long mod_ll(long long a, long long b) {
    return a - floor_div_ll(a, b) * b;
}

inline Int rfloor(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

/* Fractional part <q> = q - floor(q), always in [0,1). */
inline Rat frac(const Rat& q) {
    return q - Rat(rfloor(q));
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

/* Inverse of a modulo n (n >= 1, gcd(a,n) = 1). */
inline long long mod_inverse(long long a, long long n) {
    if (n == 1) return 0;
    a = mod_ll(a, n);
    long long t = 0, new_t = 1, r = n, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t; t = new_t; new_t = tmp;
        tmp = r - q * new_r; r = new_r; new_r = tmp;
    }
    if (r != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    return mod_ll(t, n);
}

inline long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 61) / (base > 0 ? base : 1))
            throw std::overflow_error("pow_ll: overflow");
        r *= base;
    }
    return r;
}

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/* Digits (a_1,...,a_ell) of k in base p, least significant first, so that
 * k = a_1 + a_2 p + ... + a_ell p^(ell-1).  Requires 0 <= k < p^ell. */
inline std::vector<long long> p_adic_digits(long long k, long long p, int ell) {
    if (k < 0 || k >= pow_ll(p, ell))
        throw std::domain_error("p_adic_digits: k out of range [0, p^ell)");
    std::vector<long long> digits(ell);
    for (int j = 0; j < ell; ++j) { digits[j] = k % p; k /= p; }
    return digits;
}

inline long long from_p_adic_digits(const std::vector<long long>& digits, long long p) {
    long long k = 0, w = 1;
    for (long long d : digits) { k += d * w; w *= p; }
    return k;
}

/* Binomial coefficient mod a prime, via Lucas' theorem. */
inline long long binom_mod_p(long long n, long long k, long long p) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    while (n > 0 || k > 0) {
        long long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        long long c = 1;
        for (long long i = 0; i < kd; ++i) {
            c = c * ((nd - i) % p) % p;
            c = c * mod_inverse(i + 1, p) % p;
        }
        result = result * c % p;
        n /= p; k /= p;
    }
    return result;
}

}  // namespace cycdiff
