#include "steiner/forms.hpp"

#include <bit>
#include <unordered_map>

#include "steiner/error.hpp"

namespace steiner {

SparsePoly steiner_form(const Hypermatrix& h) {
  const int n = h.dim(), k = h.order();
  std::map<Exponent, std::int64_t, GrlexGreater> sums;
  Exponent e(static_cast<std::size_t>(n), 0);
  auto entries = h.entries();
  std::size_t next = 0;
  auto walk = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (const std::int64_t v = entries[next++]; v != 0) sums[e] += v;
      return;
    }
    for (int i = 0; i < n; ++i) {
      ++e[i];
      self(self, depth + 1);
      --e[i];
    }
  };
  walk(walk, 0);
  SparsePoly p(n);
  for (const auto& [exp, c] : sums) p.add_term(exp, Rat(BigInt(std::to_string(c))));
  return p;
}

namespace {

class DistanceCache {
 public:
  explicit DistanceCache(const Tree& t) : t_(t) {}
  int operator()(std::uint64_t mask) {
    if (mask == 0) return 0;
    auto [it, inserted] = memo_.try_emplace(mask, 0);
    if (inserted) it->second = t_.steiner_distance_mask(mask);
    return it->second;
  }

 private:
  const Tree& t_;
  std::unordered_map<std::uint64_t, int> memo_;
};

CycNum scaled(const CycNum& x, std::int64_t c) { return x * Rat(static_cast<long>(c)); }
CFloat scaled(const CFloat& x, std::int64_t c) { return x * CFloat(Real(c)); }

bool is_nonzero(const CycNum& x) { return !x.is_zero(); }
bool is_nonzero(const CFloat& x) { return x != CFloat(0); }

std::uint64_t binomial(int n, int r) {
  std::uint64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return b;
}

/// Sums multinomial(S) * prod_{v in S} y_v over multisets S of the given
/// size drawn from the support of y, bucketed by the distinct vertex set of S.
template <class T>
std::unordered_map<std::uint64_t, T> multiset_sums(std::span<const T> y, int size, const T& one) {
  std::vector<Vertex> support;
  for (Vertex v = 0; v < static_cast<Vertex>(y.size()); ++v)
    if (is_nonzero(y[v])) support.push_back(v);

  std::vector<std::vector<T>> powers(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    powers[i].push_back(one);
    for (int e = 1; e <= size; ++e) powers[i].push_back(powers[i].back() * y[support[i]]);
  }

  std::unordered_map<std::uint64_t, T> sums;
  if (size == 0) {
    sums.emplace(0, one);
    return sums;
  }
  auto recurse = [&](auto&& self, std::size_t idx, int remaining, std::uint64_t mask,
                     std::uint64_t multinomial, const T& product) -> void {
    if (remaining == 0) {
      const T term = scaled(product, static_cast<std::int64_t>(multinomial));
      auto [it, inserted] = sums.try_emplace(mask, term);
      if (!inserted) it->second = it->second + term;
      return;
    }
    if (idx == support.size()) return;
    const bool last = idx + 1 == support.size();
    for (int c = last ? remaining : 0; c <= remaining; ++c) {
      const std::uint64_t bit = c > 0 ? std::uint64_t{1} << support[idx] : 0;
      self(self, idx + 1, remaining - c, mask | bit, multinomial * binomial(remaining, c),
           c > 0 ? product * powers[idx][c] : product);
    }
  };
  recurse(recurse, 0, size, 0, 1, one);
  return sums;
}

void check_order(const Tree& t, int k) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "order must be at least 2");
  if (k > 21) fail(ErrorCode::InvalidArgument, "order above 21 overflows the multinomial table");
  if (t.size() > 64) fail(ErrorCode::TooLarge, "direct gradient supports n <= 64");
}

template <class T>
std::vector<T> gradient_impl(const Tree& t, int k, std::span<const T> point, const T& zero, const T& one) {
  check_order(t, k);
  const int n = t.size();
  if (static_cast<int>(point.size()) != n) fail(ErrorCode::InvalidArgument, "point length != n");
  DistanceCache dist(t);
  const auto sums = multiset_sums<T>(point, k - 1, one);
  std::vector<T> grad(static_cast<std::size_t>(n), zero);
  for (Vertex z = 0; z < n; ++z) {
    const std::uint64_t zbit = std::uint64_t{1} << z;
    T acc = zero;
    for (const auto& [mask, value] : sums) {
      if (const int d = dist(mask | zbit); d != 0) acc = acc + scaled(value, d);
    }
    grad[z] = scaled(acc, k);
  }
  return grad;
}

}  // namespace

std::vector<CycNum> gradient_direct(const Tree& t, int k, std::span<const CycNum> point) {
  const unsigned m = point.empty() ? 1 : point.front().conductor();
  for (const auto& x : point) {
    if (x.conductor() != m) fail(ErrorCode::ConductorMismatch, "point coordinates live in different fields");
  }
  return gradient_impl<CycNum>(t, k, point, CycNum::zero(m), CycNum::one(m));
}

std::vector<CFloat> gradient_direct(const Tree& t, int k, std::span<const CFloat> point) {
  return gradient_impl<CFloat>(t, k, point, CFloat(0), CFloat(1));
}

std::vector<CFloat> hessian_direct(const Tree& t, int k, std::span<const CFloat> point) {
  check_order(t, k);
  const int n = t.size();
  if (static_cast<int>(point.size()) != n) fail(ErrorCode::InvalidArgument, "point length != n");
  DistanceCache dist(t);
  const auto sums = multiset_sums<CFloat>(point, k - 2, CFloat(1));
  std::vector<CFloat> hess(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), CFloat(0));
  for (Vertex z = 0; z < n; ++z) {
    for (Vertex j = z; j < n; ++j) {
      const std::uint64_t pair = (std::uint64_t{1} << z) | (std::uint64_t{1} << j);
      CFloat acc = 0;
      for (const auto& [mask, value] : sums) {
        if (const int d = dist(mask | pair); d != 0) acc += scaled(value, d);
      }
      acc = scaled(acc, static_cast<std::int64_t>(k) * (k - 1));
      hess[static_cast<std::size_t>(z) * n + j] = acc;
      hess[static_cast<std::size_t>(j) * n + z] = acc;
    }
  }
  return hess;
}

// ---- order-3 structure -------------------------------------------------

namespace {

void require_two(const Tree& t) {
  if (t.size() < 2) fail(ErrorCode::TooSmall, "order-3 identities need n >= 2");
}

SparsePoly cubic_form(const Tree& t) { return steiner_form(build_steiner(t, 3)); }

std::vector<SparsePoly> gradient_polys(const SparsePoly& p) {
  std::vector<SparsePoly> out;
  for (int r = 0; r < p.num_vars(); ++r) out.push_back(p.partial(r));
  return out;
}

}  // namespace

SparsePoly pairwise_form(const Tree& t) {
  const int n = t.size();
  SparsePoly g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      Exponent e(static_cast<std::size_t>(n), 0);
      e[i] = e[j] = 1;
      g.add_term(e, Rat(3 * t.distance(i, j)));
    }
  }
  return g;
}

bool verify_sg_factorization(const Tree& t) {
  require_two(t);
  return cubic_form(t) == SparsePoly::sum_of_variables(t.size()) * pairwise_form(t);
}

bool verify_euler_identity(const Tree& t) {
  require_two(t);
  const int n = t.size();
  const SparsePoly p = cubic_form(t);
  SparsePoly lhs(n);
  for (int r = 0; r < n; ++r) lhs += SparsePoly::variable(n, r) * p.partial(r);
  const SparsePoly rhs = Rat(3) * (SparsePoly::sum_of_variables(n) * pairwise_form(t));
  return lhs == rhs;
}

std::vector<SparsePoly> s3_cofactors(const Tree& t) {
  require_two(t);
  const int n = t.size();
  const SparsePoly s = SparsePoly::sum_of_variables(n);
  std::vector<SparsePoly> f;
  for (Vertex r = 0; r < n; ++r) {
    SparsePoly fr = Rat(2 - t.degree(r)) * s - make_rat(2, 3) * SparsePoly::variable(n, r);
    f.push_back(fr * make_rat(1, n - 1));
  }
  return f;
}

SparsePoly s3_cofactor_combination(const Tree& t) {
  const auto f = s3_cofactors(t);
  const auto grad = gradient_polys(cubic_form(t));
  SparsePoly total(t.size());
  for (std::size_t r = 0; r < f.size(); ++r) total += f[r] * grad[r];
  return total;
}

bool verify_s3_decomposition(const Tree& t) {
  return s3_cofactor_combination(t) == SparsePoly::sum_of_variables(t.size()).pow(3);
}

std::optional<Rat> s3_decomposition_multiple(const Tree& t) {
  const SparsePoly combo = s3_cofactor_combination(t);
  const SparsePoly s3 = SparsePoly::sum_of_variables(t.size()).pow(3);
  // Ratio of the leading coefficients, then confirm termwise.
  const Rat lambda = combo.is_zero() ? Rat(0) : combo.terms().begin()->second / s3.terms().begin()->second;
  if (combo == lambda * s3) return lambda;
  return std::nullopt;
}

bool verify_s3_membership(const Tree& t) {
  return make_rat(1, 3) * s3_cofactor_combination(t) == SparsePoly::sum_of_variables(t.size()).pow(3);
}

bool verify_not_divisible(const Tree& t) {
  require_two(t);
  const SparsePoly s = SparsePoly::sum_of_variables(t.size());
  for (const auto& dp : gradient_polys(cubic_form(t))) {
    if (std::holds_alternative<SparsePoly>(divide_by_linear(dp, s))) return false;
  }
  return true;
}

}  // namespace steiner
