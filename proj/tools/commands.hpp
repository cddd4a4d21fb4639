#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace steinerctl {

enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kBudget = 2,
  kNoCertificate = 3,
  kVerificationFailed = 4,
};

struct Common {
  bool verbose = false;
  bool pretty = false;
};

struct GenArgs {
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct HypermatrixArgs {
  std::string tree;
  int k = 2;
  std::string format = "json";
  std::string out;
  bool zero_degenerate = false;
};

struct CertifyArgs {
  std::string tree;
  int k = 3;
  bool degenerate = false;
};

struct IdentitiesArgs {
  std::string tree;
};

struct SearchArgs {
  std::string tree;
  int k = 3;
  std::uint64_t seed = 0;
  int restarts = 20;
  double tol = 1e-10;
  int max_iterations = 100;
};

struct CampaignArgs {
  int n_min = 3;
  int n_max = 6;
  std::vector<int> ks;
  int trees_per_n = 10;
  std::uint64_t seed = 0;
  std::string out_dir;
  int jobs = 1;
};

int run_gen(const Common& c, const GenArgs& a);
int run_hypermatrix(const Common& c, const HypermatrixArgs& a);
int run_certify(const Common& c, const CertifyArgs& a);
int run_identities(const Common& c, const IdentitiesArgs& a);
int run_search(const Common& c, const SearchArgs& a);
int run_campaign(const Common& c, const CampaignArgs& a);

}  // namespace steinerctl
