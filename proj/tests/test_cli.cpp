#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "schur/cli.hpp"

using namespace schur;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
}

}  // namespace

TEST_CASE("argument parsing maps every flag") {
  RunConfig cfg = parse_args({"verify", "bounded_t", "--n", "3", "--m", "3", "--degree", "5",
                              "--bounds", "3,2,1", "--family", "e", "--t-mode", "ones",
                              "--format", "json", "--threads", "2", "--box", "2",
                              "--lambda-max", "2", "--lambda", "2,1"});
  REQUIRE(cfg.command == "verify");
  REQUIRE(cfg.identity == "bounded_t");
  REQUIRE(cfg.n == 3);
  REQUIRE(cfg.m == 3);
  REQUIRE(cfg.degree == 5);
  REQUIRE(cfg.bounds == std::vector<int>{3, 2, 1});
  REQUIRE(cfg.family == "e");
  REQUIRE(cfg.t_mode == "ones");
  REQUIRE(cfg.format == "json");
  REQUIRE(cfg.threads == 2);
  REQUIRE(cfg.box == 2);
  REQUIRE(cfg.lambda_max == 2);
  REQUIRE(cfg.lambda == "2,1");

  RunConfig s = parse_args({"schur", "--shape", "3,1", "--n", "3", "--method", "ssyt"});
  REQUIRE(s.command == "schur");
  REQUIRE(s.shape == "3,1");
  REQUIRE(s.n == 3);
  REQUIRE(s.method == "ssyt");

  RunConfig t = parse_args({"table", "paper-example"});
  REQUIRE(t.command == "table");
  REQUIRE(t.table_name == "paper-example");
}

TEST_CASE("argument round-trip through to_args") {
  RunConfig v;
  v.command = "verify";
  v.identity = "bounded_family";
  v.n = 2;
  v.m = 2;
  v.degree = 3;
  v.bounds = {2, 1};
  v.family = "e+h";
  v.t_mode = "repeated";
  v.format = "json";
  v.threads = 4;
  v.box = 1;
  v.lambda_max = 2;
  v.lambda = "2,1";
  REQUIRE(parse_args(to_args(v)) == v);

  RunConfig s;
  s.command = "schur";
  s.shape = "2,2";
  s.n = 2;
  s.method = "jacobi_trudi";
  REQUIRE(parse_args(to_args(s)) == s);

  RunConfig t;
  t.command = "table";
  t.table_name = "paper-example";
  REQUIRE(parse_args(to_args(t)) == t);
}

TEST_CASE("guardrails reject out-of-range parameters") {
  REQUIRE_THROWS_AS(parse_args({"verify", "lemma1", "--n", "5"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "lemma1", "--n", "0"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "cauchy_h", "--m", "5"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "cauchy_h", "--degree", "11"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "bounded_t", "--bounds", "1,1,1,1,1"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "bounded_t", "--bounds", "11"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "lemma1", "--threads", "0"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "lemma1", "--threads", "17"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "lemma1", "--box", "7"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "lemma2", "--lambda-max", "7"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "lemma1", "--format", "xml"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "thm1_t", "--t-mode", "sideways"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"schur", "--shape", "2,x"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"schur", "--shape", "11"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"schur", "--shape", "2,1", "--method", "magic"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"table", "no-such-table"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"frobnicate"}), UsageError);
  REQUIRE_THROWS_AS(parse_args({}), UsageError);
  REQUIRE_THROWS_AS(parse_args({"verify", "lemma1", "--no-such-flag"}), UsageError);
}

TEST_CASE("in-process runs: success paths") {
  RunResult ok = run_cli({"verify", "macdonald", "--n", "2", "--bounds", "2"});
  REQUIRE(ok.code == 0);
  REQUIRE(ok.out.find("identity      macdonald") != std::string::npos);
  REQUIRE(ok.out.find("verdict       equal") != std::string::npos);
  REQUIRE(ok.out.rfind("OK\n") == ok.out.size() - 3);

  RunResult schur_out = run_cli({"schur", "--shape", "2,1", "--n", "2"});
  REQUIRE(schur_out.code == 0);
  REQUIRE(schur_out.out == "x1^2*x2 + x1*x2^2\n");

  RunResult table = run_cli({"table", "paper-example"});
  REQUIRE(table.code == 0);
  REQUIRE(table.out.find("2,1") != std::string::npos);
  REQUIRE(table.out.find("t^4") != std::string::npos);
  REQUIRE(table.out.find("product") != std::string::npos);
  REQUIRE(table.out.rfind("OK\n") == table.out.size() - 3);

  RunResult threaded = run_cli({"verify", "thm1_family", "--n", "2", "--m", "2",
                                "--degree", "3", "--family", "e+h", "--threads", "2"});
  REQUIRE(threaded.code == 0);

  RunResult lam = run_cli({"verify", "lemma2", "--n", "3", "--m", "2", "--lambda", "2,1,0"});
  REQUIRE(lam.code == 0);
  REQUIRE(lam.out.find("lambda        2,1,0") != std::string::npos);
}

TEST_CASE("in-process runs: errors and help") {
  RunResult unknown = run_cli({"verify", "no_such_identity"});
  REQUIRE(unknown.code == 2);
  REQUIRE(unknown.err.find("unknown identity") != std::string::npos);

  RunResult guard = run_cli({"verify", "macdonald", "--n", "9"});
  REQUIRE(guard.code == 2);
  REQUIRE(guard.err.find("--n") != std::string::npos);

  RunResult missing = run_cli({});
  REQUIRE(missing.code == 2);

  RunResult badbounds = run_cli({"verify", "macdonald", "--n", "2", "--bounds", "2,1"});
  REQUIRE(badbounds.code == 2);
  REQUIRE(badbounds.err.find("constant") != std::string::npos);

  RunResult help = run_cli({"--help"});
  REQUIRE(help.code == 0);
  REQUIRE(help.out.find("verify") != std::string::npos);
  REQUIRE(help.out.find("schur") != std::string::npos);
  REQUIRE(help.out.find("table") != std::string::npos);

  RunResult vhelp = run_cli({"verify", "--help"});
  REQUIRE(vhelp.code == 0);
  REQUIRE(vhelp.out.find("--degree") != std::string::npos);
}

TEST_CASE("json report shape and determinism") {
  std::vector<std::string> args{"verify", "macdonald", "--n",     "1",
                                "--bounds", "2",        "--format", "json"};
  RunResult r1 = run_cli(args);
  REQUIRE(r1.code == 0);

  nlohmann::json j = nlohmann::json::parse(r1.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys == std::vector<std::string>{"elapsed_ms", "identity", "lhs_terms", "params",
                                           "verdict", "witness"});
  REQUIRE(j["identity"] == "macdonald");
  REQUIRE(j["verdict"] == "equal");
  REQUIRE(j["witness"].is_null());
  REQUIRE(j["lhs_terms"] == 3);
  REQUIRE(j["params"]["n"] == "1");
  REQUIRE(j["params"]["bounds"] == "2");

  RunResult r2 = run_cli(args);
  nlohmann::json j2 = nlohmann::json::parse(r2.out);
  j.erase("elapsed_ms");
  j2.erase("elapsed_ms");
  REQUIRE(j.dump() == j2.dump());
}

TEST_CASE("report rendering for a mismatch") {
  IdentityReport rep;
  rep.identity = "thm1_family";
  rep.params = {{"n", "2"}, {"m", "2"}};
  rep.equal = false;
  rep.witness = Witness{"x1*y1", "2", "3"};
  rep.lhs_terms = 17;
  rep.elapsed_ms = 1.5;

  std::string text = emit_report_text(rep);
  REQUIRE(text.find("verdict       mismatch") != std::string::npos);
  REQUIRE(text.find("monomial      x1*y1") != std::string::npos);
  REQUIRE(text.find("lhs coeff     2") != std::string::npos);
  REQUIRE(text.find("rhs coeff     3") != std::string::npos);
  REQUIRE(text.find("elapsed ms    1.500") != std::string::npos);
  REQUIRE(text.rfind("FAIL\n") == text.size() - 5);

  nlohmann::json j = nlohmann::json::parse(emit_report_json(rep));
  REQUIRE(j["verdict"] == "mismatch");
  REQUIRE(j["witness"]["monomial"] == "x1*y1");
  REQUIRE(j["witness"]["lhs"] == "2");
  REQUIRE(j["witness"]["rhs"] == "3");
  REQUIRE(j["lhs_terms"] == 17);
}

TEST_CASE("custom coefficient families from files") {
  REQUIRE(detail::parse_family_kind("h") == FamilyKind::h);
  REQUIRE(detail::parse_family_kind("e+h") == FamilyKind::e_plus_h);
  REQUIRE(detail::parse_family_kind("./some/path.txt") == FamilyKind::custom);

  // Windows line endings and trailing blank lines are tolerated.
  write_file("family_crlf.txt", "1\r\ny1 + y2\r\n\r\n");
  std::vector<std::string> lines = detail::read_family_file("family_crlf.txt");
  REQUIRE(lines == std::vector<std::string>{"1", "y1 + y2"});

  write_file("family_gap.txt", "1\n\ny1\n");
  REQUIRE_THROWS_AS(detail::read_family_file("family_gap.txt"), UsageError);
  write_file("family_empty.txt", "\n\n");
  REQUIRE_THROWS_AS(detail::read_family_file("family_empty.txt"), UsageError);
  REQUIRE_THROWS_AS(detail::read_family_file("family_missing.txt"), UsageError);

  // The bounded family identity holds for arbitrary coefficients, so a
  // three-member file supports bounds up to (2,2).
  write_file("family_ok.txt", "1\ny1 + y2\ny1*y2\n");
  RunResult ok = run_cli({"verify", "bounded_family", "--n", "2", "--m", "2", "--bounds",
                          "2,2", "--family", "family_ok.txt"});
  REQUIRE(ok.code == 0);
  REQUIRE(ok.out.find("family        custom") != std::string::npos);

  // Too short for the sweep: indexing past the last member is reported as an
  // error, not silently treated as zero.
  write_file("family_short.txt", "1\ny1 + y2\n");
  RunResult shortf = run_cli({"verify", "bounded_family", "--n", "2", "--m", "2", "--bounds",
                              "2,2", "--family", "family_short.txt"});
  REQUIRE(shortf.code == 2);
  REQUIRE(shortf.err.find("f_2") != std::string::npos);

  // Unparsable member line.
  write_file("family_bad.txt", "1\ny1 +\n");
  RunResult badf = run_cli({"verify", "bounded_family", "--n", "2", "--m", "2", "--bounds",
                            "1,1", "--family", "family_bad.txt"});
  REQUIRE(badf.code == 2);

  for (const char* f : {"family_crlf.txt", "family_gap.txt", "family_empty.txt",
                        "family_ok.txt", "family_short.txt", "family_bad.txt"})
    std::remove(f);
}
