#include "steiner/gp_matrix.hpp"

#include "steiner/error.hpp"

namespace steiner {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "matrix size mismatch");
  const int n = a.size();
  RatMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      if (a(i, l) == 0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

std::vector<Rat> row_times(const std::vector<Rat>& row, const RatMatrix& m) {
  if (static_cast<int>(row.size()) != m.size()) fail(ErrorCode::InvalidArgument, "vector size mismatch");
  std::vector<Rat> out(row.size(), Rat(0));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out[j] += row[i] * m(i, j);
  return out;
}

RatMatrix distance_matrix(const Tree& t) {
  const int n = t.size();
  RatMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) = t.distance(i, j);
  return d;
}

Rat determinant_exact(const RatMatrix& m) {
  const int n = m.size();
  if (n == 0) return Rat(1);
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  Rat scale = 1;  // det(m) = det(a) / scale
  for (int i = 0; i < n; ++i) {
    BigInt l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= Rat(l);
  }

  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rat(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rat(sign * a[n - 1][n - 1]) / scale;
}

std::optional<std::vector<Rat>> solve_exact(const RatMatrix& m, const std::vector<Rat>& b) {
  const int n = m.size();
  if (static_cast<int>(b.size()) != n) fail(ErrorCode::InvalidArgument, "right-hand side size mismatch");
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n) + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = b[i];
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[col], a[p]);
    const Rat pivot = a[col][col];
    for (int j = col; j <= n; ++j) a[col][j] /= pivot;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rat> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

Rat graham_pollak_value(int n) {
  if (n < 2) fail(ErrorCode::TooSmall, "formula needs n >= 2");
  BigInt p = 1;
  for (int i = 0; i < n - 2; ++i) p *= -2;
  return Rat(-(n - 1) * p);
}

RatMatrix gl_inverse(const Tree& t) {
  const int n = t.size();
  if (n < 2) fail(ErrorCode::TooSmall, "inverse formula needs n >= 2");
  RatMatrix inv(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat v = make_rat((2 - t.degree(i)) * (2 - t.degree(j)), 2 * (n - 1));
      if (i == j) {
        v -= make_rat(t.degree(i), 2);
      } else if (t.adjacent(i, j)) {
        v += make_rat(1, 2);
      }
      inv(i, j) = v;
    }
  }
  return inv;
}

std::vector<Rat> c_coefficients(const Tree& t) {
  const int n = t.size();
  if (n < 2) fail(ErrorCode::TooSmall, "c coefficients need n >= 2");
  std::vector<Rat> c;
  for (int r = 0; r < n; ++r) c.push_back(make_rat(2 - t.degree(r), n - 1));
  return c;
}

}  // namespace steiner
