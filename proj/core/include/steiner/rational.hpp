#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace steiner {

/// Arbitrary-precision rational, always kept in lowest terms with positive
/// denominator (gmpxx canonicalizes after every arithmetic operation).
using Rat = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form. Throws InvalidArgument on den == 0.
Rat make_rat(const BigInt& num, const BigInt& den);
Rat make_rat(long num, long den = 1);

/// Parses decimal strings; used by the JSON readers.
Rat rat_from_strings(const std::string& num, const std::string& den);

/// Nonnegative rational square root when both numerator and denominator are
/// perfect squares.
std::optional<Rat> rational_sqrt(const Rat& q);

}  // namespace steiner
