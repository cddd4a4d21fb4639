#pragma once

#include <optional>
#include <vector>

#include "steiner/rational.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// Dense square matrix over Q.
class RatMatrix {
 public:
  explicit RatMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  static RatMatrix identity(int n);

  int size() const noexcept { return n_; }
  Rat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_symmetric() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  int n_;
  std::vector<Rat> a_;
};

/// Row vector times matrix.
std::vector<Rat> row_times(const std::vector<Rat>& row, const RatMatrix& m);

RatMatrix distance_matrix(const Tree& t);

/// Exact determinant. Rows are scaled to integers and reduced with Bareiss
/// fraction-free elimination, so every intermediate stays an integer.
Rat determinant_exact(const RatMatrix& m);

/// Solves m x = b by Gauss-Jordan elimination over Q; nullopt if singular.
std::optional<std::vector<Rat>> solve_exact(const RatMatrix& m, const std::vector<Rat>& b);

/// -(n-1)(-2)^(n-2).
Rat graham_pollak_value(int n);

/// Closed-form inverse of the distance matrix:
///   (2 - d_i)(2 - d_j) / (2(n-1))  - d_i / 2 on the diagonal
///                                  + a_ij / 2 off it.
/// Throws TooSmall for n < 2.
RatMatrix gl_inverse(const Tree& t);

/// c_r = (2 - d_r) / (n - 1), the solution of c D = (1, ..., 1).
std::vector<Rat> c_coefficients(const Tree& t);

}  // namespace steiner
