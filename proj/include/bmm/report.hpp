#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bmm {

using Json = nlohmann::ordered_json;

enum class Status { verified, mismatch, error };

std::string to_string(Status s);

struct Mismatch {
  Json weight;  // integer weight, or null
  Json degree;  // filtration degree, or null for univariate checks
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string command;
  Json params = Json::object();
  std::optional<int> T;
  int N = 0;
  Status status = Status::verified;
  std::optional<Mismatch> first_mismatch;
  Json payload = Json::object();
  long elapsed_ms = 0;
};

Json to_json(const Report& r);
std::string to_text(const Report& r);

// Individual commands; each throws std::invalid_argument on bad parameters.
Report gordon_report(int s, int i, int N);
Report character_report(int p, int q, int m, int n, int N);
Report refined_report(int s, int i, int T, int N);
Report basis_report(int s, int i, int N);
Report singular_report(int p, int q);
Report freeness_report(int p, int q, int T, int N);
Report freeness_module_report(int s, int i, int T, int N);
Report jet_dims_report(int t, int T, int N);

// Command-line entry point. Exit codes: 0 verified or computed, 1 mismatch,
// 2 usage or parameter error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmm
