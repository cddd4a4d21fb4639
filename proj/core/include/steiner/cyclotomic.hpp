#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

/// Euler's totient.
unsigned euler_phi(unsigned m);

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
/// Computed once per m by dividing x^m - 1 by Phi_d for the proper divisors
/// d of m, then cached for the life of the process.
std::shared_ptr<const std::vector<Rat>> cyclotomic_polynomial(unsigned m);

/// Exact element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1)
/// modulo Phi_m. Equality and is_zero() are exact field-element tests.
///
/// Binary operations require equal conductors and throw ConductorMismatch
/// otherwise; use lift() to move an element into a larger field first.
class CycNum {
 public:
  /// Zero of Q = Q(zeta_1).
  CycNum();

  static CycNum zero(unsigned m);
  static CycNum one(unsigned m);
  static CycNum rational(unsigned m, const Rat& q);
  /// zeta_m^power, with zeta_m = exp(2 pi i / m). Negative powers allowed.
  static CycNum root_of_unity(unsigned m, std::int64_t power);
  /// Coefficients in powers of zeta_m; any length, reduced modulo Phi_m.
  static CycNum from_coefficients(unsigned m, std::vector<Rat> coeffs);

  unsigned conductor() const noexcept { return m_; }
  const std::vector<Rat>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// Constant coefficient; equals the value when is_rational().
  const Rat& constant_term() const noexcept { return c_.front(); }

  /// Image of this element in Q(zeta_target); target must be a multiple of
  /// conductor().
  CycNum lift(unsigned target) const;

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_m. Throws InvalidArgument for zero.
  CycNum inverse() const;

  CycNum pow(std::uint64_t e) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rat& q);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const Rat& q) { return a *= q; }
  friend CycNum operator*(const Rat& q, CycNum a) { return a *= q; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend bool operator==(const CycNum& a, const CycNum& b);

 private:
  CycNum(unsigned m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
  void require_same_field(const CycNum& o) const;

  unsigned m_;
  std::vector<Rat> c_;
};

CycNum cyc_root_of_unity(unsigned m, std::int64_t power);
CycNum cyc_pow(const CycNum& x, std::uint64_t e);

/// Least common conductor of a set of elements (1 for an empty span).
unsigned common_conductor(std::span<const CycNum> xs);

/// Lifts every element into Q(zeta_target).
std::vector<CycNum> lift_all(std::span<const CycNum> xs, unsigned target);

/// Square root inside the element's own field, if one is found. Handles
/// rationals (using i when 4 divides the conductor) and arbitrary elements of
/// Q(i). Returns nullopt otherwise, which does not prove that no root exists.
std::optional<CycNum> exact_sqrt(const CycNum& x);

}  // namespace steiner
