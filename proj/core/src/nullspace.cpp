#include "steiner/nullspace.hpp"

#include <algorithm>
#include <numeric>

#include "steiner/error.hpp"
#include "steiner/forms.hpp"
#include "steiner/sparse_poly.hpp"

namespace steiner {

AnchorVertices anchor_vertices(const Tree& t) {
  if (t.size() < 3) fail(ErrorCode::TooSmall, "anchor vertices need n >= 3");
  Vertex u = 0;
  while (!t.is_leaf(u)) ++u;
  const Vertex w = t.neighbors(u).front();
  Vertex v = -1;
  for (Vertex x : t.neighbors(w)) {
    if (x != u) {
      v = x;
      break;
    }
  }
  return {u, w, v};
}

std::vector<CycNum> canonical_odd_nullvector(const Tree& t, int k) {
  if (k < 3 || k % 2 == 0) fail(ErrorCode::EvenOrder, "construction needs odd k >= 3, got " + std::to_string(k));
  if (t.size() < 3) fail(ErrorCode::TooSmall, "construction needs n >= 3");
  const auto m = static_cast<unsigned>(2 * k - 2);
  const auto [u, w, v] = anchor_vertices(t);
  std::vector<CycNum> y(static_cast<std::size_t>(t.size()), CycNum::zero(m));
  const CycNum zeta = CycNum::root_of_unity(m, 1);
  y[u] = CycNum::one(m);
  y[v] = zeta;
  y[w] = -CycNum::one(m) - zeta;
  return y;
}

namespace {

void require_nonzero(std::span<const CycNum> point) {
  if (std::all_of(point.begin(), point.end(), [](const CycNum& x) { return x.is_zero(); })) {
    fail(ErrorCode::ZeroVector, "the zero vector is not a nullvector candidate");
  }
}

NullvectorReport make_report(std::span<const CycNum> point, std::vector<CycNum> gradient) {
  NullvectorReport r;
  r.point.assign(point.begin(), point.end());
  r.exact_zero = std::all_of(gradient.begin(), gradient.end(), [](const CycNum& g) { return g.is_zero(); });
  for (const auto& g : gradient) r.embedded_residual = std::max(r.embedded_residual, magnitude(cyc_embed(g)));
  r.gradient = std::move(gradient);
  return r;
}

double max_magnitude(std::span<const CFloat> xs) {
  double m = 0.0;
  for (const auto& x : xs) m = std::max(m, magnitude(x));
  return m;
}

}  // namespace

NullvectorReport verify_nullvector(const Tree& t, int k, std::span<const CycNum> point) {
  require_nonzero(point);
  return make_report(point, gradient_direct(t, k, point));
}

NullvectorReport verify_form_nullvector(const Hypermatrix& h, std::span<const CycNum> point) {
  if (static_cast<int>(point.size()) != h.dim()) fail(ErrorCode::InvalidArgument, "point length != n");
  require_nonzero(point);
  const SparsePoly p = steiner_form(h);
  std::vector<CycNum> gradient;
  for (int r = 0; r < h.dim(); ++r) gradient.push_back(evaluate(p.partial(r), point));
  return make_report(point, std::move(gradient));
}

std::vector<CycNum> degenerate_nullvector(const Hypermatrix& h) {
  const int n = h.dim(), k = h.order();
  if (k < 3 && n >= 2) fail(ErrorCode::OrderTooLow, "the unit-vector argument needs k >= 3");
  auto entries = h.entries();
  for (std::size_t off = 0; off < entries.size(); ++off) {
    if (entries[off] != 0 && is_degenerate_index(h.index_of(off))) {
      fail(ErrorCode::NotDegenerateZeroed, "degenerate entry at offset " + std::to_string(off) + " is nonzero");
    }
  }
  std::vector<CycNum> e(static_cast<std::size_t>(n), CycNum::zero(1));
  e.back() = CycNum::one(1);
  return e;
}

bool membership_sg(const Tree& t, std::span<const CycNum> point) {
  const int n = t.size();
  if (n < 2) fail(ErrorCode::TooSmall, "membership test needs n >= 2");
  if (static_cast<int>(point.size()) != n) fail(ErrorCode::InvalidArgument, "point length != n");
  const unsigned m = common_conductor(point);
  const auto x = lift_all(point, m);
  CycNum s = CycNum::zero(m);
  for (const auto& xi : x) s += xi;
  if (!s.is_zero()) return false;
  CycNum g = CycNum::zero(m);
  for (Vertex i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    CycNum row = CycNum::zero(m);
    for (Vertex j = i + 1; j < n; ++j) row += x[j] * Rat(t.distance(i, j));
    g += x[i] * row;
  }
  return g.is_zero();
}

double sg_residual(const Tree& t, std::span<const CFloat> point) {
  const int n = t.size();
  if (static_cast<int>(point.size()) != n) fail(ErrorCode::InvalidArgument, "point length != n");
  CFloat s = 0, g = 0;
  for (Vertex i = 0; i < n; ++i) {
    s += point[i];
    for (Vertex j = i + 1; j < n; ++j) g += CFloat(Real(3 * t.distance(i, j))) * point[i] * point[j];
  }
  return std::max(magnitude(s), magnitude(g));
}

Completion complete_nullvector(const Tree& t, std::span<const CycNum> tail) {
  const int n = t.size();
  if (n < 3) fail(ErrorCode::TooSmall, "completion needs n >= 3");
  if (static_cast<int>(tail.size()) != n - 2) fail(ErrorCode::InvalidArgument, "tail must have n - 2 entries");

  Completion out;
  out.conductor = std::lcm(4U, common_conductor(tail));
  const unsigned m = out.conductor;
  const auto a = lift_all(tail, m);  // a[j - 2] is coordinate j
  auto d = [&](Vertex i, Vertex j) { return Rat(t.distance(i, j)); };
  const Rat d01 = d(0, 1);

  CycNum tail_sum = CycNum::zero(m);
  out.a = CycNum::rational(m, d01);
  out.b = CycNum::zero(m);
  out.c = CycNum::zero(m);
  for (Vertex j = 2; j < n; ++j) {
    const CycNum& aj = a[j - 2];
    tail_sum += aj;
    out.b += aj * (d01 - d(0, j) + d(1, j));
    for (Vertex l = 2; l < n; ++l) out.c += aj * a[l - 2] * (d(1, j) - d(j, l) / 2);
  }
  out.discriminant = out.b * out.b - CycNum::rational(m, Rat(4)) * out.a * out.c;

  auto finish = [&](std::vector<CycNum> exact, std::vector<CFloat> numeric) {
    CompletionCandidate cand;
    if (!exact.empty()) {
      cand.trivial = std::all_of(exact.begin(), exact.end(), [](const CycNum& x) { return x.is_zero(); });
      cand.numeric = cyc_embed(exact);
      cand.exact = std::move(exact);
    } else {
      cand.numeric = std::move(numeric);
      cand.trivial = std::all_of(cand.numeric.begin(), cand.numeric.end(),
                                 [](const CFloat& x) { return x == CFloat(0); });
    }
    cand.residual = max_magnitude(gradient_direct(t, 3, cand.numeric));
    out.candidates.push_back(std::move(cand));
  };

  const CycNum two_a = CycNum::rational(m, 2 * d01);
  if (auto root = exact_sqrt(out.discriminant)) {
    std::vector<CycNum> firsts{(-out.b + *root) / two_a};
    if (!root->is_zero()) firsts.push_back((-out.b - *root) / two_a);
    for (const auto& a1 : firsts) {
      std::vector<CycNum> v{a1, -a1 - tail_sum};
      v.insert(v.end(), a.begin(), a.end());
      finish(std::move(v), {});
    }
    return out;
  }

  out.root_in_field = false;
  const CFloat bn = cyc_embed(out.b), disc = cyc_embed(out.discriminant);
  const CFloat sq = sqrt(disc), denom = CFloat(to_real(2 * d01));
  const CFloat tail_n = cyc_embed(tail_sum);
  const auto tail_embedded = cyc_embed(a);
  for (const CFloat& a1 : {(-bn + sq) / denom, (-bn - sq) / denom}) {
    std::vector<CFloat> v{a1, -a1 - tail_n};
    v.insert(v.end(), tail_embedded.begin(), tail_embedded.end());
    finish({}, std::move(v));
  }
  return out;
}

}  // namespace steiner
