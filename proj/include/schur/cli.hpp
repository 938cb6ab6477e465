#pragma once
// Command line front end: `verify <identity>`, `schur`, and `table`.
// Exit codes: 0 verified / success, 1 identity mismatch, 2 usage or
// parameter error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "schur/verify.hpp"

namespace schur {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  // "verify", "schur", or "table"

  // verify
  std::string identity;
  int n = 2;
  int m = 2;
  int degree = 4;
  std::vector<int> bounds;
  std::string family = "h";  // h | e | p | e+h | path to a family file
  std::string t_mode = "distinct";
  std::string format = "text";
  int threads = 1;
  int box = 4;
  int lambda_max = 3;
  std::string lambda;

  // schur
  std::string shape;
  std::string method = "bialternant";

  // table
  std::string table_name;

  bool operator==(const RunConfig&) const = default;
};

inline std::vector<std::string> to_args(const RunConfig& cfg) {
  std::vector<std::string> a;
  a.push_back(cfg.command);
  if (cfg.command == "verify") {
    a.push_back(cfg.identity);
    a.insert(a.end(), {"--n", std::to_string(cfg.n)});
    a.insert(a.end(), {"--m", std::to_string(cfg.m)});
    a.insert(a.end(), {"--degree", std::to_string(cfg.degree)});
    if (!cfg.bounds.empty()) {
      std::string b;
      for (std::size_t i = 0; i < cfg.bounds.size(); ++i) {
        if (i) b += ',';
        b += std::to_string(cfg.bounds[i]);
      }
      a.insert(a.end(), {"--bounds", b});
    }
    a.insert(a.end(), {"--family", cfg.family});
    a.insert(a.end(), {"--t-mode", cfg.t_mode});
    a.insert(a.end(), {"--format", cfg.format});
    a.insert(a.end(), {"--threads", std::to_string(cfg.threads)});
    a.insert(a.end(), {"--box", std::to_string(cfg.box)});
    a.insert(a.end(), {"--lambda-max", std::to_string(cfg.lambda_max)});
    if (!cfg.lambda.empty()) a.insert(a.end(), {"--lambda", cfg.lambda});
  } else if (cfg.command == "schur") {
    a.insert(a.end(), {"--shape", cfg.shape});
    a.insert(a.end(), {"--n", std::to_string(cfg.n)});
    a.insert(a.end(), {"--method", cfg.method});
  } else if (cfg.command == "table") {
    a.push_back(cfg.table_name);
  }
  return a;
}

namespace detail {

// Guardrails, applied before any dispatch.
inline void validate(const RunConfig& cfg) {
  auto fail = [](const std::string& msg) { throw UsageError(msg); };
  if (cfg.command == "verify" || cfg.command == "schur") {
    if (cfg.n < 1 || cfg.n > 4) fail("--n must be between 1 and 4");
  }
  if (cfg.command == "verify") {
    if (cfg.m < 1 || cfg.m > 4) fail("--m must be between 1 and 4");
    if (cfg.degree < 0 || cfg.degree > 10) fail("--degree must be between 0 and 10");
    if (cfg.bounds.size() > 4) fail("--bounds accepts at most 4 entries");
    for (int b : cfg.bounds)
      if (b < 0 || b > 10) fail("--bounds entries must be between 0 and 10");
    if (cfg.threads < 1 || cfg.threads > 16) fail("--threads must be between 1 and 16");
    if (cfg.box < 0 || cfg.box > 6) fail("--box must be between 0 and 6");
    if (cfg.lambda_max < 0 || cfg.lambda_max > 6) fail("--lambda-max must be between 0 and 6");
    if (cfg.format != "text" && cfg.format != "json") fail("--format must be text or json");
    if (cfg.t_mode != "distinct" && cfg.t_mode != "repeated" && cfg.t_mode != "ones")
      fail("--t-mode must be distinct, repeated, or ones");
  }
  if (cfg.command == "schur") {
    std::vector<int> parts;
    try {
      parts = Partition::parse(cfg.shape).parts();
    } catch (const std::exception& e) {
      fail(std::string("bad --shape: ") + e.what());
    }
    for (int p : parts)
      if (p > 10) fail("--shape parts must be at most 10");
    if (cfg.method != "bialternant" && cfg.method != "jacobi_trudi" &&
        cfg.method != "dual_jacobi_trudi" && cfg.method != "ssyt")
      fail("--method must be bialternant, jacobi_trudi, dual_jacobi_trudi, or ssyt");
  }
  if (cfg.command == "table" && cfg.table_name != "paper-example")
    fail("unknown table '" + cfg.table_name + "' (available: paper-example)");
}

// Returns 0 (parsed, cfg valid), 2 (usage error), or 3 (help; message holds
// the help text).
inline int parse_cli(const std::vector<std::string>& args, RunConfig& cfg, std::string& message) {
  CLI::App app{"Exact Schur polynomial computations and identity checks"};
  app.require_subcommand(1);

  CLI::App* v = app.add_subcommand("verify", "Verify one identity and report the verdict");
  v->add_option("identity", cfg.identity,
                "Identity id (thm1_family, thm1_t, bounded_family, bounded_t, macdonald, "
                "cauchy_h, cauchy_dual_e, lemma1, lemma2)")
      ->required();
  v->add_option("--n", cfg.n, "Number of x variables");
  v->add_option("--m", cfg.m, "Number of y variables");
  v->add_option("--degree", cfg.degree, "Series comparison degree");
  v->add_option("--bounds", cfg.bounds, "Bound partition, e.g. 3,2")->delimiter(',');
  v->add_option("--family", cfg.family, "Coefficient family: h, e, p, e+h, or a file path");
  v->add_option("--t-mode", cfg.t_mode, "t specialization: distinct, repeated, or ones");
  v->add_option("--format", cfg.format, "Report format: text or json");
  v->add_option("--threads", cfg.threads, "Worker threads for the summation side");
  v->add_option("--box", cfg.box, "lemma1: composition box upper bound");
  v->add_option("--lambda-max", cfg.lambda_max, "lemma2: largest first part to sweep");
  v->add_option("--lambda", cfg.lambda, "lemma2: verify a single shape, e.g. 2,1,0");

  CLI::App* s = app.add_subcommand("schur", "Print one Schur polynomial");
  s->add_option("--shape", cfg.shape, "Partition, e.g. 2,1")->required();
  s->add_option("--n", cfg.n, "Number of x variables");
  s->add_option("--method", cfg.method,
                "bialternant, jacobi_trudi, dual_jacobi_trudi, or ssyt");

  CLI::App* t = app.add_subcommand("table", "Print a built-in worked example");
  t->add_option("name", cfg.table_name, "Table name (paper-example)")->required();

  std::vector<const char*> argv;
  argv.push_back("schurtool");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    CLI::App* target = &app;
    for (CLI::App* sub : {v, s, t})
      if (sub->parsed()) target = sub;
    message = target->help();
    return 3;
  } catch (const CLI::ParseError& e) {
    message = e.what();
    return 2;
  }

  if (v->parsed()) cfg.command = "verify";
  else if (s->parsed()) cfg.command = "schur";
  else cfg.command = "table";

  try {
    validate(cfg);
  } catch (const UsageError& e) {
    message = e.what();
    return 2;
  }
  return 0;
}

inline FamilyKind parse_family_kind(const std::string& s) {
  if (s == "h") return FamilyKind::h;
  if (s == "e") return FamilyKind::e;
  if (s == "p") return FamilyKind::p;
  if (s == "e+h") return FamilyKind::e_plus_h;
  return FamilyKind::custom;
}

inline std::vector<std::string> read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open family file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
    lines.pop_back();
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (lines[k].find_first_not_of(" \t") == std::string::npos)
      throw UsageError("family file '" + path + "': line " + std::to_string(k + 1) +
                       " is empty (line k defines f_k)");
  }
  if (lines.empty()) throw UsageError("family file '" + path + "' is empty");
  return lines;
}

}  // namespace detail

inline std::string emit_report_text(const IdentityReport& rep) {
  std::ostringstream os;
  auto row = [&os](const std::string& k, const std::string& v) {
    os << std::left << std::setw(14) << k << v << "\n";
  };
  row("identity", rep.identity);
  for (const auto& [k, val] : rep.params) row(k, val);
  row("verdict", rep.equal ? "equal" : "mismatch");
  if (rep.witness) {
    row("monomial", rep.witness->monomial);
    row("lhs coeff", rep.witness->lhs_coeff);
    row("rhs coeff", rep.witness->rhs_coeff);
  }
  row("lhs terms", std::to_string(rep.lhs_terms));
  {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << rep.elapsed_ms;
    row("elapsed ms", ms.str());
  }
  os << (rep.equal ? "OK" : "FAIL") << "\n";
  return os.str();
}

inline std::string emit_report_json(const IdentityReport& rep) {
  nlohmann::json j;
  j["identity"] = rep.identity;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, val] : rep.params) params[k] = val;
  j["params"] = params;
  j["verdict"] = rep.equal ? "equal" : "mismatch";
  if (rep.witness) {
    j["witness"] = {{"monomial", rep.witness->monomial},
                    {"lhs", rep.witness->lhs_coeff},
                    {"rhs", rep.witness->rhs_coeff}};
  } else {
    j["witness"] = nullptr;
  }
  j["lhs_terms"] = rep.lhs_terms;
  j["elapsed_ms"] = rep.elapsed_ms;
  return j.dump(2) + "\n";
}

inline RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string message;
  int code = detail::parse_cli(args, cfg, message);
  if (code != 0) throw UsageError(message);
  return cfg;
}

namespace detail {

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  auto id = parse_identity(cfg.identity);
  if (!id) throw UsageError("unknown identity '" + cfg.identity + "'");

  VerifyOptions opt;
  opt.n = cfg.n;
  opt.m = cfg.m;
  opt.degree = cfg.degree;
  opt.bounds = cfg.bounds;
  opt.threads = cfg.threads;
  opt.box_max = cfg.box;
  opt.lambda_max = cfg.lambda_max;
  opt.family = parse_family_kind(cfg.family);
  if (opt.family == FamilyKind::custom) opt.custom_family = read_family_file(cfg.family);
  opt.t_mode = cfg.t_mode == "distinct" ? TMode::distinct
               : cfg.t_mode == "repeated" ? TMode::repeated
                                          : TMode::ones;
  if (!cfg.lambda.empty()) opt.lambda = Partition::parse(cfg.lambda);

  IdentityReport rep = verify(*id, opt);
  out << (cfg.format == "json" ? emit_report_json(rep) : emit_report_text(rep));
  return rep.equal ? 0 : 1;
}

inline int run_schur(const RunConfig& cfg, std::ostream& out) {
  ContextPtr ctx = VarContext::make(cfg.n, 0, 0, false);
  Partition lam = Partition::parse(cfg.shape);
  SchurMethod method = cfg.method == "bialternant"        ? SchurMethod::bialternant
                       : cfg.method == "jacobi_trudi"     ? SchurMethod::jacobi_trudi
                       : cfg.method == "dual_jacobi_trudi" ? SchurMethod::dual_jacobi_trudi
                                                           : SchurMethod::ssyt;
  out << schur_poly(ctx, Bank::x, lam, cfg.n, method).str() << "\n";
  return 0;
}

inline int run_table(std::ostream& out) {
  ExampleTable table = example_table();
  std::size_t wl = 6, wd = 3;
  for (const ExampleRow& r : table.rows) {
    wl = std::max(wl, r.lambda.str().size());
    wd = std::max(wd, r.det.str().size());
  }
  out << std::left << std::setw(static_cast<int>(wl + 2)) << "lambda"
      << std::setw(static_cast<int>(wd + 2)) << "det" << "schur" << "\n";
  for (const ExampleRow& r : table.rows) {
    out << std::left << std::setw(static_cast<int>(wl + 2)) << r.lambda.str()
        << std::setw(static_cast<int>(wd + 2)) << r.det.str() << r.schur.str() << "\n";
  }
  out << "sum      " << table.sum.str() << "\n";
  out << "product  (1 + t*x1 + t^2*x1^2)*(1 + t*x2 + t^2*x2^2)\n";
  bool ok = table.sum == table.product;
  out << (ok ? "OK" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string message;
  int code = detail::parse_cli(args, cfg, message);
  if (code == 3) {
    out << message;
    return 0;
  }
  if (code != 0) {
    err << "error: " << message << "\n";
    return 2;
  }
  try {
    if (cfg.command == "verify") return detail::run_verify(cfg, out);
    if (cfg.command == "schur") return detail::run_schur(cfg, out);
    return detail::run_table(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace schur
