#include "steiner/sparse_poly.hpp"

#include <algorithm>
#include <numeric>

#include "steiner/error.hpp"

namespace steiner {

namespace {

std::uint64_t degree_of(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SparsePoly SparsePoly::constant(int num_vars, const Rat& c) {
  SparsePoly p(num_vars);
  p.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) fail(ErrorCode::InvalidArgument, "variable index out of range");
  SparsePoly p(num_vars);
  Exponent e(static_cast<std::size_t>(num_vars), 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

SparsePoly SparsePoly::linear(int num_vars, std::span<const Rat> coeffs) {
  if (static_cast<int>(coeffs.size()) != num_vars) fail(ErrorCode::InvalidArgument, "coefficient count != n");
  SparsePoly p(num_vars);
  for (int i = 0; i < num_vars; ++i) {
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

SparsePoly SparsePoly::sum_of_variables(int num_vars) {
  std::vector<Rat> ones(static_cast<std::size_t>(num_vars), Rat(1));
  return linear(num_vars, ones);
}

int SparsePoly::total_degree() const {
  // The first term is the grlex leader.
  return terms_.empty() ? -1 : static_cast<int>(degree_of(terms_.begin()->first));
}

int SparsePoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return degree_of(t.first) == d; });
}

Rat SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(const Exponent& e, const Rat& c) {
  if (static_cast<int>(e.size()) != n_) fail(ErrorCode::InvalidArgument, "exponent length != variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::partial(int var) const {
  if (var < 0 || var >= n_) fail(ErrorCode::InvalidArgument, "variable index out of range");
  SparsePoly d(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    d.add_term(f, c * e[var]);
  }
  return d;
}

SparsePoly SparsePoly::substitute(int var, const Rat& value) const {
  if (var < 0 || var >= n_) fail(ErrorCode::InvalidArgument, "variable index out of range");
  SparsePoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    Rat scale = 1;
    for (std::uint32_t i = 0; i < e[var]; ++i) scale *= value;
    f[var] = 0;
    out.add_term(f, c * scale);
  }
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(n_, Rat(1));
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

void SparsePoly::require_same_ring(const SparsePoly& o) const {
  if (n_ != o.n_) fail(ErrorCode::InvalidArgument, "polynomials over different variable counts");
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.require_same_ring(b);
  SparsePoly r(a.n_);
  Exponent e(static_cast<std::size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly partial(const SparsePoly& p, int var) { return p.partial(var); }

std::variant<SparsePoly, NotDivisible> divide_by_linear(const SparsePoly& p, const SparsePoly& s) {
  if (p.num_vars() != s.num_vars()) fail(ErrorCode::InvalidArgument, "polynomials over different variable counts");
  if (s.is_zero() || s.total_degree() != 1 || !s.is_homogeneous()) {
    fail(ErrorCode::InvalidArgument, "divisor must be a nonzero linear form");
  }
  const int n = s.num_vars();
  int pivot = -1;
  for (int j = n - 1; j >= 0 && pivot < 0; --j)
    if (s.degree_in(j) == 1) pivot = j;
  Exponent pivot_exp(static_cast<std::size_t>(n), 0);
  pivot_exp[pivot] = 1;
  const Rat lead = s.coefficient(pivot_exp);

  SparsePoly quotient(n);
  SparsePoly rest = p;
  while (true) {
    const std::pair<const Exponent, Rat>* top = nullptr;
    for (const auto& term : rest.terms()) {
      if (term.first[pivot] > 0 && (top == nullptr || term.first[pivot] > top->first[pivot])) top = &term;
    }
    if (top == nullptr) break;
    Exponent e = top->first;
    --e[pivot];
    SparsePoly step(n);
    step.add_term(e, top->second / lead);
    quotient += step;
    rest -= step * s;
  }
  if (!rest.is_zero()) return NotDivisible{std::move(rest)};
  return quotient;
}

namespace {

template <class Scalar, class FromRat>
Scalar evaluate_impl(const SparsePoly& p, std::span<const Scalar> point, const Scalar& zero,
                     FromRat&& from_rat) {
  const int n = p.num_vars();
  if (static_cast<int>(point.size()) != n) fail(ErrorCode::InvalidArgument, "point length != variable count");
  // powers[v][e] = point[v]^e
  std::vector<std::vector<Scalar>> powers(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int d = std::max(p.degree_in(v), 0);
    auto& pw = powers[v];
    pw.reserve(static_cast<std::size_t>(d) + 1);
    pw.push_back(from_rat(Rat(1)));
    for (int e = 1; e <= d; ++e) pw.push_back(pw.back() * point[v]);
  }
  Scalar total = zero;
  for (const auto& [e, c] : p.terms()) {
    Scalar term = from_rat(c);
    for (int v = 0; v < n; ++v)
      if (e[v] > 0) term = term * powers[v][e[v]];
    total = total + term;
  }
  return total;
}

}  // namespace

CycNum evaluate(const SparsePoly& p, std::span<const CycNum> point) {
  const unsigned m = point.empty() ? 1 : point.front().conductor();
  for (const auto& x : point) {
    if (x.conductor() != m) fail(ErrorCode::ConductorMismatch, "point coordinates live in different fields");
  }
  return evaluate_impl<CycNum>(p, point, CycNum::zero(m), [m](const Rat& q) { return CycNum::rational(m, q); });
}

CFloat evaluate(const SparsePoly& p, std::span<const CFloat> point) {
  return evaluate_impl<CFloat>(p, point, CFloat(0), [](const Rat& q) { return CFloat(to_real(q)); });
}

}  // namespace steiner
