#include "bmm/report.hpp"

#include "bmm/characters.hpp"
#include "bmm/filtration.hpp"
#include "bmm/jet.hpp"
#include "bmm/modes.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bmm {

std::string to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::mismatch: return "mismatch";
    case Status::error: return "error";
  }
  return "error";
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["truncation"] = Json::object();
  j["truncation"]["T"] = r.T ? Json(*r.T) : Json(nullptr);
  j["truncation"]["N"] = r.N;
  j["status"] = to_string(r.status);
  if (r.first_mismatch) {
    Json m;
    m["weight"] = r.first_mismatch->weight;
    m["degree"] = r.first_mismatch->degree;
    m["lhs"] = r.first_mismatch->lhs;
    m["rhs"] = r.first_mismatch->rhs;
    j["first_mismatch"] = m;
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["payload"] = r.payload;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

namespace {

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Tables are arrays of equal-length rows; print them right-aligned.
bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  return std::all_of(v.begin(), v.end(), [&](const Json& row) {
    return row.is_array() && row.size() == v.front().size() &&
           std::all_of(row.begin(), row.end(), [](const Json& x) { return x.is_primitive(); });
  });
}

void print_table(std::ostream& os, const Json& table, const std::string& indent) {
  std::size_t width = 1;
  for (const auto& row : table)
    for (const auto& x : row) width = std::max(width, scalar_text(x).size());
  for (const auto& row : table) {
    os << indent;
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << std::setw(static_cast<int>(width)) << scalar_text(row[k]);
    os << "\n";
  }
}

void print_value(std::ostream& os, const std::string& key, const Json& v, const std::string& indent) {
  if (is_table(v)) {
    os << indent << key << ":\n";
    print_table(os, v, indent + "  ");
  } else if (v.is_object()) {
    os << indent << key << ":\n";
    for (const auto& [k, x] : v.items()) print_value(os, k, x, indent + "  ");
  } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); })) {
    os << indent << key << ":\n";
    for (std::size_t k = 0; k < v.size(); ++k) print_value(os, "- " + std::to_string(k), v[k], indent + "  ");
  } else if (v.is_array()) {
    os << indent << key << ":";
    for (const auto& x : v) os << " " << scalar_text(x);
    os << "\n";
  } else {
    os << indent << key << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "params:";
  for (const auto& [k, v] : r.params.items()) os << " " << k << "=" << scalar_text(v);
  os << "\n";
  os << "truncation: T=" << (r.T ? std::to_string(*r.T) : "-") << " N=" << r.N << "\n";
  os << "status: " << to_string(r.status) << "\n";
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    os << "first_mismatch: weight=" << scalar_text(m.weight) << " degree=" << scalar_text(m.degree)
       << " lhs=" << m.lhs << " rhs=" << m.rhs << "\n";
  } else {
    os << "first_mismatch: none\n";
  }
  for (const auto& [k, v] : r.payload.items()) print_value(os, k, v, "");
  os << "elapsed_ms: " << r.elapsed_ms << "\n";
  return os.str();
}

namespace {

void check_truncation(int T, int N) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  if (T < 0) throw std::invalid_argument("T must be nonnegative");
}

Json series_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_string(c));
  Json j;
  j["offset"] = to_string(s.offset());
  j["coefficients"] = coeffs;
  return j;
}

Json bivariate_json(const BivariateSeries& s) {
  Json rows = Json::array();
  for (int p = 0; p <= s.t_truncation(); ++p) {
    Json row = Json::array();
    for (int n = 0; n <= s.q_truncation(); ++n) row.push_back(to_string(s(p, n)));
    rows.push_back(row);
  }
  Json j;
  j["offset"] = to_string(s.offset());
  j["table"] = rows;
  return j;
}

Json table_json(const BigradedTable& t) {
  Json rows = Json::array();
  for (int p = 0; p <= t.T(); ++p) {
    Json row = Json::array();
    for (int n = 0; n <= t.N(); ++n) row.push_back(t(p, n));
    rows.push_back(row);
  }
  Json j;
  j["offset"] = to_string(t.offset());
  j["table"] = rows;
  return j;
}

Json terms_json(const PBWVector& u) {
  std::vector<std::pair<Partition, Rational>> sorted(u.terms().begin(), u.terms().end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return MonomialOrder::greater(a.first, b.first); });
  Json out = Json::array();
  for (const auto& [lambda, coeff] : sorted) {
    Json t;
    t["partition"] = lambda.str();
    t["coeff"] = to_string(coeff);
    out.push_back(t);
  }
  return out;
}

void univariate_verdict(Report& r, const QSeries& lhs, const QSeries& rhs, int through) {
  if (lhs.offset() != rhs.offset()) {
    r.status = Status::mismatch;
    r.first_mismatch = Mismatch{nullptr, nullptr, "offset " + to_string(lhs.offset()),
                                "offset " + to_string(rhs.offset())};
    return;
  }
  if (auto n = QSeries::first_mismatch(lhs, rhs, through)) {
    r.status = Status::mismatch;
    r.first_mismatch = Mismatch{*n, nullptr, to_string(lhs[*n]), to_string(rhs[*n])};
  }
}

}  // namespace

Report gordon_report(int s, int i, int N) {
  check_si(s, i);
  check_truncation(0, N);
  Report r;
  r.command = "gordon";
  r.params["s"] = s;
  r.params["i"] = i;
  r.N = N;
  const QSeries lhs = gordon_lhs(s, i, N);
  const QSeries rhs = gordon_rhs(s, i, N);
  univariate_verdict(r, lhs, rhs, N);
  r.payload["lhs"] = series_json(lhs);
  r.payload["rhs"] = series_json(rhs);
  return r;
}

Report character_report(int p, int q, int m, int n, int N) {
  check_truncation(0, N);
  const ModelParams mp = model_params(p, q, m, n);
  Report r;
  r.command = "character";
  r.params["p"] = p;
  r.params["q"] = q;
  r.params["m"] = m;
  r.params["n"] = n;
  r.N = N;
  const QSeries ff = feigin_fuchs(p, q, m, n, N);
  r.payload["c"] = to_string(mp.c);
  r.payload["h"] = to_string(mp.h);
  r.payload["character"] = series_json(ff);
  if (p == 2) {
    // h_{1,n} = h_{1,q-n}, so the boundary index is the smaller of the two.
    const int s = (q - 1) / 2;
    const int i = std::min(n, q - n);
    QSeries product = restricted_product(s, i, N);
    product.set_offset(model_params(2, q, 1, i).h);
    r.payload["reference"] = "product";
    univariate_verdict(r, ff, product, N);
  } else {
    const int through = std::min(N, 10);
    QSeries dims(through, mp.h);
    for (int k = 0; k <= through; ++k) dims[k] = static_cast<long>(irr_dim(mp.c, mp.h, k));
    r.payload["reference"] = "gram-rank";
    univariate_verdict(r, ff, dims, through);
  }
  return r;
}

Report refined_report(int s, int i, int T, int N) {
  check_si(s, i);
  check_truncation(T, N);
  const ModelParams mp = boundary_params(s, i);
  Report r;
  r.command = "refined";
  r.params["s"] = s;
  r.params["i"] = i;
  r.T = T;
  r.N = N;
  const BivariateSeries nahm = nahm_refined(s, i, T, N);
  const BigradedTable oracle = pbw_refined_irr(mp.c, mp.h, T, N);
  for (int n = 0; n <= N && !r.first_mismatch; ++n)
    for (int p = 0; p <= T; ++p)
      if (nahm(p, n) != oracle(p, n)) {
        r.status = Status::mismatch;
        r.first_mismatch = Mismatch{n, p, to_string(nahm(p, n)), std::to_string(oracle(p, n))};
        break;
      }
  r.payload["nahm"] = bivariate_json(nahm);
  r.payload["gram"] = table_json(oracle);
  return r;
}

Report basis_report(int s, int i, int N) {
  check_si(s, i);
  check_truncation(0, N);
  Report r;
  r.command = "basis";
  r.params["s"] = s;
  r.params["i"] = i;
  r.N = N;
  Json levels = Json::array();
  for (int n = 0; n <= N; ++n) {
    const BasisCheck check = theorem2_basis_check(s, i, n);
    Json lvl;
    lvl["weight"] = n;
    Json basis = Json::array();
    for (const auto& lambda : check.basis) basis.push_back(lambda.str());
    lvl["basis"] = basis;
    lvl["irr_dim"] = check.irr_dim;
    lvl["gram_route"] = check.gram_route;
    lvl["standard_route"] = check.standard_route;
    levels.push_back(lvl);
    if (!check.ok() && !r.first_mismatch) {
      r.status = Status::mismatch;
      r.first_mismatch = Mismatch{n, nullptr, std::to_string(check.basis.size()), std::to_string(check.irr_dim)};
    }
  }
  r.payload["levels"] = levels;
  return r;
}

Report singular_report(int p, int q) {
  const Rational c = central_charge(p, q);
  Report r;
  r.command = "singular";
  r.params["p"] = p;
  r.params["q"] = q;
  const int w = (p - 1) * (q - 1);
  r.N = w;
  const PBWVector a = vacuum_singular(p, q);
  r.payload["c"] = to_string(c);
  r.payload["weight"] = w;
  r.payload["vector"] = a.str();
  r.payload["terms"] = terms_json(a);
  for (int k : {1, 2}) {
    const PBWVector image = apply_mode(k, a);
    if (!image.is_zero() && !r.first_mismatch) {
      r.status = Status::mismatch;
      r.first_mismatch = Mismatch{w - k, nullptr, "L_" + std::to_string(k) + " a = " + image.str(), "0"};
    }
  }
  return r;
}

namespace {

Report freeness_common(const FreenessVerdict& v, Report r) {
  r.T = v.T;
  r.N = v.N;
  if (v.first_deficit) {
    const auto& d = *v.first_deficit;
    r.status = Status::mismatch;
    r.first_mismatch = Mismatch{d.weight, d.li_degree, std::to_string(d.jet_dim), std::to_string(d.gr_dim)};
  }
  r.payload["scope"] = v.scope;
  r.payload["free"] = v.is_free;
  r.payload["surjective"] = v.surjective;
  r.payload["jet"] = table_json(v.jet);
  r.payload["gr"] = table_json(v.gr);
  return r;
}

}  // namespace

Report freeness_report(int p, int q, int T, int N) {
  check_truncation(T, N);
  central_charge(p, q);
  Report r;
  r.command = "freeness";
  r.params["p"] = p;
  r.params["q"] = q;
  return freeness_common(freeness_vertexalg(p, q, T, N), std::move(r));
}

Report freeness_module_report(int s, int i, int T, int N) {
  check_si(s, i);
  check_truncation(T, N);
  Report r;
  r.command = "freeness-module";
  r.params["s"] = s;
  r.params["i"] = i;
  return freeness_common(freeness_module(s, i, T, N), std::move(r));
}

Report jet_dims_report(int t, int T, int N) {
  check_truncation(T, N);
  if (t < 1) throw std::invalid_argument("t must be positive");
  Report r;
  r.command = "jet-dims";
  r.params["t"] = t;
  r.T = T;
  r.N = N;
  r.payload["quotient"] = table_json(jet_quotient_bigraded(t, T, N));
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for boundary Virasoro minimal models", "bmm"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string out_path;
  bool no_timing = false;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

  int s = 0, i = 0, p = 0, q = 0, m = 0, n_idx = 0, t_exp = 0;
  int N = -1, T = -1;
  std::function<Report()> job;

  auto* gordon = app.add_subcommand("gordon", "Gordon identity through q^N");
  gordon->add_option("--s", s)->required();
  gordon->add_option("--i", i)->required();
  gordon->add_option("--N", N);
  gordon->callback([&] { job = [&] { return gordon_report(s, i, N < 0 ? 20 : N); }; });

  auto* character = app.add_subcommand("character", "minimal-model character against an independent count");
  character->add_option("--p", p)->required();
  character->add_option("--q", q)->required();
  character->add_option("--m", m)->required();
  character->add_option("--n", n_idx)->required();
  character->add_option("--N", N);
  character->callback([&] { job = [&] { return character_report(p, q, m, n_idx, N < 0 ? 20 : N); }; });

  auto* refined = app.add_subcommand("refined", "refined character against Gram ranks");
  refined->add_option("--s", s)->required();
  refined->add_option("--i", i)->required();
  refined->add_option("--N", N);
  refined->add_option("--T", T);
  refined->callback([&] {
    job = [&] {
      const int n = N < 0 ? 10 : N;
      return refined_report(s, i, T < 0 ? n : T, n);
    };
  });

  auto* basis = app.add_subcommand("basis", "P^{s,i} basis by Gram rank and by standard monomials");
  basis->add_option("--s", s)->required();
  basis->add_option("--i", i)->required();
  basis->add_option("--N", N);
  basis->callback([&] { job = [&] { return basis_report(s, i, N < 0 ? 10 : N); }; });

  auto* singular = app.add_subcommand("singular", "vacuum singular vector a_{p,q}");
  singular->add_option("--p", p)->required();
  singular->add_option("--q", q)->required();
  singular->callback([&] { job = [&] { return singular_report(p, q); }; });

  auto* freeness = app.add_subcommand("freeness", "jet quotient against the Li-graded vacuum quotient");
  freeness->add_option("--p", p)->required();
  freeness->add_option("--q", q)->required();
  freeness->add_option("--N", N);
  freeness->add_option("--T", T);
  freeness->callback([&] {
    job = [&] {
      const int n = N < 0 ? 10 : N;
      return freeness_report(p, q, T < 0 ? n : T, n);
    };
  });

  auto* freeness_mod = app.add_subcommand("freeness-module", "jet module against the Li-graded module");
  freeness_mod->add_option("--s", s)->required();
  freeness_mod->add_option("--i", i)->required();
  freeness_mod->add_option("--N", N);
  freeness_mod->add_option("--T", T);
  freeness_mod->callback([&] {
    job = [&] {
      const int n = N < 0 ? 10 : N;
      return freeness_module_report(s, i, T < 0 ? n : T, n);
    };
  });

  auto* jet = app.add_subcommand("jet-dims", "bigraded dimensions of C[x_2,x_3,...]/(x_2^t)");
  jet->add_option("--t", t_exp)->required();
  jet->add_option("--N", N);
  jet->add_option("--T", T);
  jet->callback([&] {
    job = [&] {
      const int n = N < 0 ? 20 : N;
      return jet_dims_report(t_exp, T < 0 ? n : T, n);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Report report;
  try {
    const auto start = std::chrono::steady_clock::now();
    report = job();
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms =
        no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = format == "json" ? to_json(report).dump(2) + "\n" : to_text(report);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << "\n";
      return 2;
    }
    file << text;
  }
  return report.status == Status::verified ? 0 : 1;
}

}  // namespace bmm
