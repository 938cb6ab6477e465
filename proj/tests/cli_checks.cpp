// End-to-end checks against the real binary: exit codes, exact stdout for
// the documented invocations, and byte-stable JSON reports. Takes the binary
// path as argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct SpawnResult {
  int code = -1;
  std::string out;
};

SpawnResult spawn(const std::string& cmd) {
  SpawnResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  if (status >= 0 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

int failures = 0;

void check(bool ok, const std::string& label, const std::string& detail = "") {
  std::printf("[%s] %s\n", ok ? "ok" : "FAIL", label.c_str());
  if (!ok) {
    ++failures;
    if (!detail.empty()) std::printf("       %s\n", detail.c_str());
  }
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

std::string without_elapsed(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("elapsed_ms") == std::string::npos) out << line << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_checks <path-to-binary>\n");
    return 2;
  }
  std::string cli = "\"" + std::string(argv[1]) + "\"";
  std::string quiet = " 2>/dev/null";

  SpawnResult schur = spawn(cli + " schur --shape 2,1 --n 2");
  check(schur.code == 0 && schur.out == "x1^2*x2 + x1*x2^2\n",
        "schur --shape 2,1 --n 2 prints the exact polynomial", schur.out);

  SpawnResult methods = spawn(cli + " schur --shape 2,1 --n 2 --method ssyt");
  check(methods.code == 0 && methods.out == schur.out,
        "tableau method prints the same polynomial", methods.out);

  SpawnResult table = spawn(cli + " table paper-example");
  check(table.code == 0 && ends_with(table.out, "OK\n"),
        "table paper-example exits 0 and ends with OK");

  SpawnResult verify = spawn(cli + " verify macdonald --n 2 --bounds 2");
  check(verify.code == 0 && ends_with(verify.out, "OK\n"),
        "verify macdonald --n 2 --bounds 2 exits 0 and ends with OK");

  SpawnResult tmode = spawn(cli + " verify bounded_t --n 2 --bounds 2,2 --t-mode repeated");
  check(tmode.code == 0 && ends_with(tmode.out, "OK\n"),
        "verify bounded_t with a repeated base exits 0");

  SpawnResult guard = spawn(cli + " verify macdonald --n 9 --bounds 2" + quiet);
  check(guard.code == 2, "out-of-range --n exits 2",
        "exit code " + std::to_string(guard.code));

  SpawnResult unknown = spawn(cli + " verify no_such_identity" + quiet);
  check(unknown.code == 2, "unknown identity exits 2",
        "exit code " + std::to_string(unknown.code));

  SpawnResult empty = spawn(cli + quiet);
  check(empty.code == 2, "missing subcommand exits 2",
        "exit code " + std::to_string(empty.code));

  SpawnResult help = spawn(cli + " --help");
  check(help.code == 0 && help.out.find("verify") != std::string::npos &&
            help.out.find("schur") != std::string::npos,
        "--help exits 0 and lists the subcommands");

  std::string jcmd = cli + " verify cauchy_h --n 2 --m 2 --degree 3 --format json";
  SpawnResult j1 = spawn(jcmd);
  SpawnResult j2 = spawn(jcmd);
  check(j1.code == 0 && !j1.out.empty() && j1.out[0] == '{',
        "json report exits 0 and is a JSON object");
  check(without_elapsed(j1.out) == without_elapsed(j2.out) && !j1.out.empty(),
        "json report is byte-stable apart from elapsed_ms");
  check(j1.out.find("\"verdict\": \"equal\"") != std::string::npos,
        "json verdict is equal");

  std::printf("%s\n", failures == 0 ? "all cli checks passed" : "cli checks FAILED");
  return failures == 0 ? 0 : 1;
}
