#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "steiner/cfloat.hpp"
#include "steiner/cyclotomic.hpp"
#include "steiner/rational.hpp"

namespace steiner {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest first: higher total degree precedes,
/// ties broken by comparing exponents left to right.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate polynomial over Q in a fixed number of variables, stored as
/// a map from exponent vector to nonzero coefficient in grlex order.
class SparsePoly {
 public:
  using Terms = std::map<Exponent, Rat, GrlexGreater>;

  explicit SparsePoly(int num_vars = 0) : n_(num_vars) {}

  static SparsePoly constant(int num_vars, const Rat& c);
  static SparsePoly variable(int num_vars, int index);
  static SparsePoly linear(int num_vars, std::span<const Rat> coeffs);
  /// x_1 + ... + x_n.
  static SparsePoly sum_of_variables(int num_vars);

  int num_vars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  Rat coefficient(const Exponent& e) const;

  /// Adds c * x^e, dropping the term if the sum cancels.
  void add_term(const Exponent& e, const Rat& c);

  SparsePoly partial(int var) const;
  /// Replaces x_var by a rational constant (the variable count is kept).
  SparsePoly substitute(int var, const Rat& value) const;
  SparsePoly pow(unsigned e) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rat& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rat& c) { return a *= c; }
  friend SparsePoly operator*(const Rat& c, SparsePoly a) { return a *= c; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const SparsePoly& o) const;

  int n_;
  Terms terms_;
};

/// D_var p.
SparsePoly partial(const SparsePoly& p, int var);

/// Returned when the linear divisor leaves a nonzero remainder.
struct NotDivisible {
  SparsePoly remainder;
};

/// Exact division by a nonzero linear form s. Eliminates the last variable
/// x_j with a nonzero coefficient in s by synthetic division; the remainder
/// is p evaluated on the hyperplane s = 0 and is free of x_j.
std::variant<SparsePoly, NotDivisible> divide_by_linear(const SparsePoly& p, const SparsePoly& s);

/// Exact value at a point of the cyclotomic field. Every coordinate must share
/// one conductor (ConductorMismatch otherwise).
CycNum evaluate(const SparsePoly& p, std::span<const CycNum> point);
CFloat evaluate(const SparsePoly& p, std::span<const CFloat> point);

}  // namespace steiner
