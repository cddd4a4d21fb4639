#include "steiner/serialize.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include "steiner/error.hpp"

namespace steiner {

Json rat_to_json(const Rat& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Rat rat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    fail(ErrorCode::MalformedInput, "rational must be [\"num\", \"den\"]");
  }
  return rat_from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

Json cyc_to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rat_to_json(c));
  return Json{{"m", x.conductor()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const Json& j) {
  try {
    const auto m = j.at("m").get<unsigned>();
    if (m == 0) fail(ErrorCode::MalformedInput, "conductor must be positive");
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != euler_phi(m)) {
      fail(ErrorCode::MalformedInput, "coeffs must have phi(m) entries");
    }
    std::vector<Rat> coeffs;
    for (const auto& c : arr) coeffs.push_back(rat_from_json(c));
    return CycNum::from_coefficients(m, std::move(coeffs));
  } catch (const Json::exception& e) {
    fail(ErrorCode::MalformedInput, std::string("cyclotomic JSON: ") + e.what());
  }
}

Json cyc_vector_to_json(std::span<const CycNum> xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(cyc_to_json(x));
  return arr;
}

Json cfloat_to_json(const CFloat& z) {
  auto str = [](const Real& r) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<Real>::max_digits10) << r;
    return os.str();
  };
  return Json::array({str(z.real()), str(z.imag())});
}

Json poly_to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json{{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return Json{{"n", p.num_vars()}, {"terms", terms}};
}

SparsePoly poly_from_json(const Json& j) {
  try {
    SparsePoly p(j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
      p.add_term(term.at("exp").get<Exponent>(),
                 rat_from_strings(term.at("num").get<std::string>(), term.at("den").get<std::string>()));
    }
    return p;
  } catch (const Json::exception& e) {
    fail(ErrorCode::MalformedInput, std::string("polynomial JSON: ") + e.what());
  } catch (const Error& e) {
    fail(ErrorCode::MalformedInput, e.what());
  }
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json tree_to_json(const Tree& t) {
  Json edges = Json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back(Json::array({u + 1, v + 1}));
  Json prufer = Json::array();
  for (Vertex v : prufer_code(t)) prufer.push_back(v + 1);
  return Json{{"n", t.size()}, {"edges", edges}, {"prufer", prufer}, {"edge_list", format_tree(t)}};
}

Json report_to_json(const NullvectorReport& r, const Tree& t, int k) {
  return Json{{"schema", kSchemaVersion},
              {"k", k},
              {"tree", tree_to_json(t)},
              {"point", cyc_vector_to_json(r.point)},
              {"gradient", cyc_vector_to_json(r.gradient)},
              {"exact_zero", r.exact_zero},
              {"residual", r.embedded_residual}};
}

Json completion_to_json(const Completion& c) {
  Json cands = Json::array();
  for (const auto& cand : c.candidates) {
    Json numeric = Json::array();
    for (const auto& z : cand.numeric) numeric.push_back(cfloat_to_json(z));
    Json entry{{"numeric", numeric}, {"trivial", cand.trivial}, {"residual", cand.residual}};
    entry["exact"] = cand.exact ? cyc_vector_to_json(*cand.exact) : Json(nullptr);
    cands.push_back(entry);
  }
  return Json{{"conductor", c.conductor},
              {"a", cyc_to_json(c.a)},
              {"b", cyc_to_json(c.b)},
              {"c", cyc_to_json(c.c)},
              {"discriminant", cyc_to_json(c.discriminant)},
              {"root_in_field", c.root_in_field},
              {"candidates", cands}};
}

Json search_to_json(std::span<const SearchCandidate> cands, double tol) {
  Json list = Json::array();
  for (const auto& c : cands) {
    Json point = Json::array();
    for (const auto& z : c.point) point.push_back(cfloat_to_json(z));
    list.push_back(Json{{"restart", c.restart},
                        {"iterations", c.iterations},
                        {"residual", c.residual},
                        {"below_tol", c.residual <= tol},
                        {"point", point}});
  }
  Json out{{"restarts", cands.size()}, {"tol", tol}, {"candidates", list}};
  out["best_residual"] = cands.empty() ? Json(nullptr) : Json(cands.front().residual);
  return out;
}

}  // namespace steiner
