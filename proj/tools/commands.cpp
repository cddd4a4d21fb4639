#include "commands.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include "steiner/error.hpp"
#include "steiner/forms.hpp"
#include "steiner/gp_matrix.hpp"
#include "steiner/hypermatrix.hpp"
#include "steiner/nullspace.hpp"
#include "steiner/random.hpp"
#include "steiner/serialize.hpp"
#include "steiner/smalldet.hpp"
#include "steiner/tree.hpp"

namespace steinerctl {

using namespace steiner;

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) fail(ErrorCode::Io, "cannot write " + path);
}

std::string dump(const Json& j, const Common& c) { return j.dump(c.pretty ? 2 : -1) + "\n"; }

Tree load_tree(const std::string& path) { return parse_tree(read_text(path)); }

Json header(const char* kind, const Tree& t, int k) {
  return Json{{"schema", kSchemaVersion}, {"kind", kind}, {"k", k}, {"tree", tree_to_json(t)}};
}

std::string rat_str(const Rat& q) { return q.get_str(); }

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

struct Outcome {
  Json report;
  int exit = kOk;
  std::string message;
};

Outcome certify_case(const Tree& t, int k, bool degenerate, std::uint64_t budget) {
  const int n = t.size();
  Outcome out;

  if (degenerate) {
    const Hypermatrix h = zero_degenerate(build_steiner(t, k, budget));
    const auto report = verify_form_nullvector(h, degenerate_nullvector(h));
    out.report = header("degenerate", t, k);
    merge(out.report, report_to_json(report, t, k));
    out.exit = report.exact_zero ? kOk : kVerificationFailed;
    return out;
  }

  if (k == 2) {
    out.report = header("order2", t, k);
    const Rat det = n == 1 ? Rat(0) : det_order2(t);
    const Rat predicted = n == 1 ? Rat(0) : graham_pollak_value(n);
    out.report["determinant"] = rat_str(det);
    out.report["predicted"] = rat_str(predicted);
    out.report["match"] = det == predicted;
    out.exit = det == predicted ? kOk : kVerificationFailed;
    return out;
  }

  if (n == 1) {
    const auto report = verify_nullvector(t, k, std::vector<CycNum>{CycNum::one(1)});
    out.report = header("single_vertex", t, k);
    merge(out.report, report_to_json(report, t, k));
    out.exit = report.exact_zero ? kOk : kVerificationFailed;
    return out;
  }

  if (n == 2) {
    out.report = header("two_vertex", t, k);
    const bool nonzero = verify_k2_no_nullvector(k);
    out.report["nonzero_argument_holds"] = nonzero;
    if (nonzero) {
      out.report["hyperdeterminant_zero"] = false;
      return out;
    }
    // (1 + w)^(k-1) = 1 for w a primitive cube root once 6 | k - 1.
    const std::vector<CycNum> y{CycNum::one(3), cyc_root_of_unity(3, 1)};
    const auto report = verify_nullvector(t, k, y);
    merge(out.report, report_to_json(report, t, k));
    out.report["kind"] = "two_vertex";
    out.report["hyperdeterminant_zero"] = report.exact_zero;
    out.exit = report.exact_zero ? kOk : kVerificationFailed;
    return out;
  }

  if (k % 2 == 0) {
    out.report = header("none", t, k);
    out.report["message"] = "no certificate available; see search";
    out.message = "no certificate available; see search";
    out.exit = kNoCertificate;
    return out;
  }

  const auto report = verify_nullvector(t, k, canonical_odd_nullvector(t, k));
  out.report = header("odd_order", t, k);
  const auto a = anchor_vertices(t);
  out.report["anchors"] = Json{{"u", a.u + 1}, {"w", a.w + 1}, {"v", a.v + 1}};
  merge(out.report, report_to_json(report, t, k));
  out.report["kind"] = "odd_order";
  out.exit = report.exact_zero ? kOk : kVerificationFailed;
  return out;
}

}  // namespace

int run_gen(const Common&, const GenArgs& a) {
  write_text(a.out, format_tree(random_tree(a.n, a.seed)));
  return kOk;
}

int run_hypermatrix(const Common& c, const HypermatrixArgs& a) {
  const Tree t = load_tree(a.tree);
  Hypermatrix h = build_steiner(t, a.k, entry_budget_from_env());
  if (a.zero_degenerate) h = zero_degenerate(h);
  const auto format = a.format == "flat" ? HypermatrixFormat::FlatText : HypermatrixFormat::Json;
  write_text(a.out, export_hypermatrix(h, format) + (format == HypermatrixFormat::Json ? "\n" : ""));
  if (c.verbose) std::cerr << "order " << h.order() << ", dim " << h.dim() << ", " << h.entries().size() << " entries\n";
  return kOk;
}

int run_certify(const Common& c, const CertifyArgs& a) {
  const Tree t = load_tree(a.tree);
  const Outcome out = certify_case(t, a.k, a.degenerate, entry_budget_from_env());
  std::cout << dump(out.report, c);
  if (!out.message.empty()) std::cerr << out.message << "\n";
  if (c.verbose) {
    std::cerr << "kind      " << out.report["kind"].get<std::string>() << "\n";
    if (out.report.contains("exact_zero")) std::cerr << "exact     " << out.report["exact_zero"] << "\n";
    if (out.report.contains("determinant"))
      std::cerr << "det       " << out.report["determinant"].get<std::string>() << " (predicted "
                << out.report["predicted"].get<std::string>() << ")\n";
    std::cerr << "exit      " << out.exit << "\n";
  }
  return out.exit;
}

int run_identities(const Common& c, const IdentitiesArgs& a) {
  const Tree t = load_tree(a.tree);
  const int n = t.size();
  Json rows = Json::array();
  bool ok = true;

  auto row = [&](const char* name, auto&& check, Json extra = Json::object()) {
    Json r{{"name", name}};
    if (n < 2) {
      r["status"] = "skipped";
      r["reason"] = "needs at least 2 vertices";
    } else {
      const bool pass = check();
      ok = ok && pass;
      r["status"] = pass ? "pass" : "fail";
      merge(r, extra);
    }
    rows.push_back(r);
  };

  row("p = s g", [&] { return verify_sg_factorization(t); });
  row("sum_r x_r D_r p = 3 s g", [&] { return verify_euler_identity(t); });
  Json s3_extra = Json::object();
  if (n >= 2) {
    const auto lambda = s3_decomposition_multiple(t);
    s3_extra["degree_cofactor_multiple"] = lambda ? Json(rat_str(*lambda)) : Json(nullptr);
  }
  row("s^3 = sum_r (f_r / 3) D_r p", [&] { return verify_s3_membership(t); }, s3_extra);
  row("s does not divide D_r p", [&] { return verify_not_divisible(t); });
  row("closed-form inverse * D = I", [&] { return gl_inverse(t) * distance_matrix(t) == RatMatrix::identity(n); });
  row("c D = 1", [&] {
    return row_times(c_coefficients(t), distance_matrix(t)) == std::vector<Rat>(static_cast<std::size_t>(n), Rat(1));
  });
  row("sum_r c_r = 2 / (n - 1)", [&] {
    Rat sum = 0;
    for (const auto& v : c_coefficients(t)) sum += v;
    return sum == make_rat(2, n - 1);
  });
  row("det D = -(n - 1)(-2)^(n - 2)", [&] { return det_order2(t) == graham_pollak_value(n); });

  Json out{{"schema", kSchemaVersion}, {"kind", "identities"}, {"tree", tree_to_json(t)}, {"rows", rows}, {"all_pass", ok}};
  std::cout << dump(out, c);
  if (c.verbose) {
    for (const auto& r : rows) {
      std::cerr << std::left << std::setw(36) << r["name"].get<std::string>() << r["status"].get<std::string>();
      if (r.contains("reason")) std::cerr << "  (" << r["reason"].get<std::string>() << ")";
      std::cerr << "\n";
    }
  }
  return ok ? kOk : kVerificationFailed;
}

int run_search(const Common& c, const SearchArgs& a) {
  const Tree t = load_tree(a.tree);
  SearchOptions opt;
  opt.seed = a.seed;
  opt.restarts = a.restarts;
  opt.tol = a.tol;
  opt.max_iterations = a.max_iterations;
  const auto cands = numeric_search(t, a.k, opt);
  Json out = header("search", t, a.k);
  out["seed"] = a.seed;
  merge(out, search_to_json(cands, a.tol));
  std::cout << dump(out, c);
  if (c.verbose) {
    std::cerr << "restart  iters  residual\n";
    for (const auto& cand : cands)
      std::cerr << std::setw(7) << cand.restart << "  " << std::setw(5) << cand.iterations << "  "
                << std::scientific << std::setprecision(3) << cand.residual << "\n";
  }
  return kOk;
}

int run_campaign(const Common& c, const CampaignArgs& a) {
  if (a.n_min > a.n_max) fail(ErrorCode::InvalidArgument, "--n-min exceeds --n-max");
  if (a.ks.empty()) fail(ErrorCode::InvalidArgument, "empty k list");

  struct Case {
    int n, index, k;
    std::uint64_t tree_seed;
    std::string status;
    Json report;
  };
  std::vector<Case> cases;
  for (int n = a.n_min; n <= a.n_max; ++n)
    for (int i = 0; i < a.trees_per_n; ++i) {
      const std::uint64_t tree_seed =
          SplitMix64::substream(a.seed, (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(i))();
      for (int k : a.ks) cases.push_back({n, i, k, tree_seed, {}, {}});
    }

  const std::uint64_t budget = entry_budget_from_env();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < cases.size(); idx = next++) {
      Case& cs = cases[idx];
      const Tree t = random_tree(cs.n, cs.tree_seed);
      try {
        const Outcome out = certify_case(t, cs.k, false, budget);
        cs.report = out.report;
        cs.status = out.exit == kOk ? "certified" : out.exit == kNoCertificate ? "no_certificate" : "failed";
      } catch (const Error& e) {
        cs.status = e.code() == ErrorCode::BudgetExceeded ? "budget" : "error";
        cs.report = header("error", t, cs.k);
        cs.report["error"] = e.what();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(a.jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  namespace fs = std::filesystem;
  if (!a.out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(a.out_dir, ec);
    if (ec) fail(ErrorCode::Io, "cannot create " + a.out_dir + ": " + ec.message());
  }

  std::map<std::string, int> counts{{"certified", 0}, {"no_certificate", 0}, {"failed", 0}, {"budget", 0}, {"error", 0}};
  Json results = Json::array();
  Json determinants = Json::array();
  for (const auto& cs : cases) {
    ++counts[cs.status];
    Json r{{"n", cs.n}, {"tree_index", cs.index}, {"k", cs.k}, {"status", cs.status},
           {"edge_list", cs.report["tree"]["edge_list"]}};
    if (cs.report.contains("exact_zero")) r["exact_zero"] = cs.report["exact_zero"];
    if (cs.k == 2 && cs.report.contains("determinant")) {
      determinants.push_back(Json{{"n", cs.n}, {"tree_index", cs.index}, {"determinant", cs.report["determinant"]},
                                  {"predicted", cs.report["predicted"]}, {"match", cs.report["match"]}});
    }
    if (!a.out_dir.empty()) {
      std::ostringstream name;
      name << "n" << cs.n << "_t" << cs.index << "_k" << cs.k << ".json";
      write_text((fs::path(a.out_dir) / name.str()).string(), cs.report.dump(2) + "\n");
      r["file"] = name.str();
    }
    results.push_back(r);
  }

  Json summary{{"schema", kSchemaVersion},
               {"kind", "campaign"},
               {"seed", a.seed},
               {"n_range", {a.n_min, a.n_max}},
               {"k", a.ks},
               {"trees_per_n", a.trees_per_n},
               {"cases", cases.size()},
               {"counts", counts},
               {"determinants", determinants},
               {"results", results}};
  if (!a.out_dir.empty()) write_text((fs::path(a.out_dir) / "summary.json").string(), summary.dump(2) + "\n");
  std::cout << dump(summary, c);
  if (c.verbose) {
    for (const auto& [status, count] : counts) std::cerr << std::left << std::setw(16) << status << count << "\n";
  }
  if (counts["failed"] > 0 || counts["error"] > 0) return kVerificationFailed;
  if (counts["budget"] > 0) return kBudget;
  return kOk;
}

}  // namespace steinerctl
