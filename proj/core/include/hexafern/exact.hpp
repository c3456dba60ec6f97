#pragma once

// Exact integers and rationals plus the special functions used by the
// product formulas: factorial, hyperfactorial H, skipping hyperfactorial H2,
// Pochhammer symbol and a binomial with the polynomial convention.
//
// All functions are pure. The factorial-type tables are memoized behind a
// mutex, so concurrent callers see the same values as a fresh computation.

#include <gmpxx.h>

#include <string>

namespace hexafern {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical text form: integers bare ("12", "-3"), otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& value);

/// p/q in lowest terms. mpq_class(p, q) alone does not reduce, and unreduced
/// values compare wrongly. Throws std::domain_error for q == 0.
Rational ratio(long p, long q);

/// n! for n >= 0. Throws std::domain_error for n < 0.
BigInt factorial(int n);

/// H(n) = 0! 1! ... (n-1)!, with H(0) = 1. Throws std::domain_error for n < 0.
BigInt hyperfactorial(int n);

/// H2(n) = 0! 2! 4! ... (n-2)! for even n and 1! 3! 5! ... (n-2)! for odd n.
/// H2(0) = H2(1) = 1. Throws std::domain_error for n < 0.
BigInt skipping_hyperfactorial(int n);

/// Rising factorial (x)_n extended to negative n:
///   n > 0: x (x+1) ... (x+n-1)
///   n = 0: 1
///   n < 0: 1 / ((x-1)(x-2) ... (x+n))
/// Throws std::domain_error when a factor of the n < 0 denominator is zero.
Rational pochhammer(const Rational& x, int n);

/// C(n, r) = n (n-1) ... (n-r+1) / r! for r >= 0 (any integer n), 0 for r < 0.
/// In particular C(n, r) = 0 for 0 <= n < r and C(n, 0) = 1 for every n.
BigInt binomial(int n, int r);

/// 2^e for any integer e.
Rational power_of_two(int e);

}  // namespace hexafern
