// End-to-end tests driving the installed binaries as subprocesses. Tool
// paths arrive as the first two argv entries (wired up by CMake), the rest
// is handed to doctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

namespace {

std::string g_cli;
std::string g_solver;

oracle::RunResult cli(const std::string& args) { return oracle::run(g_cli + " " + args); }

void put_file(const std::string& name, const std::string& text) {
  std::ofstream f(name);
  REQUIRE(f.good());
  f << text;
}

std::string slurp(const std::string& name) {
  std::ifstream f(name);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify: witness, none, parse error") {
  put_file("cli_all0.txt", "5 2\n0 0 0 0 0\n");
  auto w = cli("verify cli_all0.txt --pattern schur");
  CHECK(w.exit_code == 0);
  CHECK(w.out == "schur slots=(1,1) values=(1,1,2) color=0\n");

  put_file("cli_avoider.txt", "4 2\n0 1 1 0\n");
  auto n = cli("verify cli_avoider.txt --pattern schur");
  CHECK(n.exit_code == 1);
  CHECK(n.out == "NONE\n");

  put_file("cli_short.txt", "4 2\n0 1 1\n");
  auto e = cli("verify cli_short.txt --pattern schur");
  CHECK(e.exit_code == 2);
  CHECK(contains(e.out, "ERROR"));
  CHECK(contains(e.out, "line 2"));

  auto missing = cli("verify cli_no_such_file.txt");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.out, "ERROR"));
}

TEST_CASE("verify: stdin input and recheck") {
  auto r = oracle::run("printf '5 2\\n0 0 0 0 0\\n' | " + g_cli + " verify - --pattern schur --recheck");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "values=(1,1,2)"));

  put_file("cli_parity8.txt", "8 2\n1 0 1 0 1 0 1 0\n");
  auto x = cli("verify cli_parity8.txt --pattern exp2 --recheck");
  CHECK(x.exit_code == 0);
  CHECK(x.out == "exp2 slots=(2,2) values=(2,2,8) color=0\n");
}

TEST_CASE("search: avoider, exhausted, dimacs side output") {
  auto found = cli("search 4 2 --pattern schur --recheck");
  CHECK(found.exit_code == 0);
  CHECK(found.out.substr(0, 4) == "4 2\n");
  // round trip: the printed coloring must re-verify as schur-free
  put_file("cli_found.txt", found.out);
  auto rt = cli("verify cli_found.txt --pattern schur");
  CHECK(rt.exit_code == 1);
  CHECK(rt.out == "NONE\n");

  auto ex = cli("search 5 2 --pattern schur --dimacs cli_s5.cnf");
  CHECK(ex.exit_code == 1);
  CHECK(ex.out == "EXHAUSTED\n");
  std::string cnf = slurp("cli_s5.cnf");
  CHECK(contains(cnf, "p cnf 10 "));
}

TEST_CASE("search: budget exit and env overrides") {
  auto b = cli("search 9 2 --pattern \"ap(3)\" --max-nodes 3");
  CHECK(b.exit_code == 3);
  CHECK(b.out == "BUDGET\n");

  auto env = oracle::run("EXPPAT_MAX_NODES=3 " + g_cli + " search 9 2 --pattern \"ap(3)\"");
  CHECK(env.exit_code == 3);
  CHECK(env.out == "BUDGET\n");

  // explicit flag beats the environment default
  auto flag = oracle::run("EXPPAT_MAX_NODES=3 " + g_cli +
                          " search 9 2 --pattern \"ap(3)\" --max-nodes 100000000");
  CHECK(flag.exit_code == 1);
  CHECK(flag.out == "EXHAUSTED\n");
}

TEST_CASE("pattern-number: classical values, unknown, jobs") {
  auto s = cli("pattern-number 2 --pattern schur --recheck");
  CHECK(s.exit_code == 0);
  CHECK(s.out == "5\n");

  auto one = cli("pattern-number 1 --pattern schur");
  CHECK(one.exit_code == 0);
  CHECK(one.out == "2\n");

  auto jobs = cli("pattern-number 2 --pattern schur --jobs 4");
  CHECK(jobs.exit_code == 0);
  CHECK(jobs.out == "5\n");

  auto unk = cli("pattern-number 2 --pattern exp2 --n-max 6");
  CHECK(unk.exit_code == 3);
  CHECK(unk.out == "UNKNOWN\n");
}

TEST_CASE("extract: triple success, named failure, sequence") {
  auto ok = cli("extract --set \"mod 0 3\" --mode triple --oracle-w 1000 --oracle-tau 250 --recheck");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "STEP 1: pick least a in ahat(mod 0 3) chose 1"));
  CHECK(contains(ok.out, "RESULT success=true checks=9/9"));

  auto fail = cli("extract --set \"mod 1 2\" --mode triple");
  CHECK(fail.exit_code == 1);
  CHECK(contains(fail.out, "FAIL EmptyAHat"));
  CHECK(contains(fail.out, "RESULT success=false"));

  auto seq = cli("extract --set \"mod 0 3\" --mode sequence --n 2 --oracle-w 1000 --oracle-tau 250"
                 " --recheck");
  CHECK(seq.exit_code == 0);
  CHECK(contains(seq.out, "(a_2, a_3)="));
  CHECK(contains(seq.out, "(a_4, a_5)="));
  CHECK(contains(seq.out, "condition (1)"));
  CHECK(contains(seq.out, "condition (4)"));
  CHECK(contains(seq.out, "RESULT success=true"));

  auto bad = cli("extract --set \"mod 0\" --mode triple");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "ERROR"));
}

TEST_CASE("density and delta") {
  auto d = cli("density --set \"mod 0 2\" --n-max 10");
  CHECK(d.exit_code == 0);
  CHECK(d.out == "count 5/10\nmin 0\nmax 1/2\n");

  auto t = cli("delta --set \"compl(mod 0 7)\" --m 3 --recheck");
  CHECK(t.exit_code == 0);
  CHECK(contains(t.out, "X = {"));
  CHECK(contains(t.out, "delta(X) = {"));

  auto g = cli("delta --set \"compl(mod 0 7)\" --m 3 --ell 2 --recheck");
  CHECK(g.exit_code == 0);
  CHECK(contains(g.out, "triple {"));

  auto thin = cli("delta --set \"mod 0 2\" --m 3");
  CHECK(thin.exit_code == 1);
  CHECK(contains(thin.out, "ERROR NotThickEnough"));
}

TEST_CASE("gamma verdicts") {
  auto g = cli("gamma --set \"mod 0 2\" --ell 1 --recheck");
  CHECK(g.exit_code == 0);
  CHECK(g.out == "b=2 c=2\nj=1: in\n");

  auto two = cli("gamma --set \"mod 0 2\" --ell 1 --set \"mod 0 3\" --ell 2 --recheck");
  CHECK(two.exit_code == 0);
  CHECK(contains(two.out, "j=1: "));
  CHECK(contains(two.out, "j=2: "));
  CHECK(!contains(two.out, "mixed"));

  auto mism = cli("gamma --set \"mod 0 2\" --set \"mod 0 3\" --ell 1");
  CHECK(mism.exit_code == 2);
  CHECK(contains(mism.out, "ERROR"));
}

TEST_CASE("export-dimacs exact text and --out") {
  std::string expect =
      "c avoid schur N=2 r=2\n"
      "p cnf 4 6\n"
      "1 2 0\n"
      "-1 -2 0\n"
      "3 4 0\n"
      "-3 -4 0\n"
      "-1 -3 0\n"
      "-2 -4 0\n";
  auto out = cli("export-dimacs 2 2 --pattern schur");
  CHECK(out.exit_code == 0);
  CHECK(out.out == expect);

  auto f = cli("export-dimacs 2 2 --pattern schur --out cli_s2.cnf");
  CHECK(f.exit_code == 0);
  CHECK(f.out.empty());
  CHECK(slurp("cli_s2.cnf") == expect);
}

TEST_CASE("check-model against the bundled solver") {
  REQUIRE(cli("export-dimacs 4 2 --pattern schur --out cli_s4.cnf").exit_code == 0);
  auto sat = oracle::run(g_solver + " cli_s4.cnf > cli_s4.model");
  CHECK(sat.exit_code == 10);
  auto ok = cli("check-model 4 2 --pattern schur --model cli_s4.model");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.substr(0, 4) == "4 2\n");
  CHECK(contains(ok.out, "\nOK\n"));

  REQUIRE(cli("export-dimacs 5 2 --pattern schur --out cli_s5b.cnf").exit_code == 0);
  auto unsat = oracle::run(g_solver + " cli_s5b.cnf");
  CHECK(unsat.exit_code == 20);
  CHECK(contains(unsat.out, "s UNSATISFIABLE"));

  put_file("cli_bad.model", "v 1 -2 3 -4 5 -6 7 -8 0\n");
  auto bad = cli("check-model 4 2 --pattern schur --model cli_bad.model");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "BAD schur slots=(1,1)"));

  auto piped = oracle::run("cat cli_s4.model | " + g_cli + " check-model 4 2 --model -");
  CHECK(piped.exit_code == 0);
  CHECK(contains(piped.out, "OK"));
}

TEST_CASE("usage errors all land on exit 2") {
  put_file("cli_all0.txt", "5 2\n0 0 0 0 0\n");
  CHECK(cli("").exit_code == 2);
  CHECK(cli("frobnicate").exit_code == 2);
  CHECK(cli("search 4 2 --bogus-flag").exit_code == 2);
  CHECK(cli("search --pattern schur").exit_code == 2);
  CHECK(cli("verify cli_all0.txt --pattern \"brauer(0)\"").exit_code == 2);
  CHECK(cli("extract --mode triple").exit_code == 2);  // --set is required
  CHECK(cli("--help").exit_code == 0);
  CHECK(contains(cli("--help").out, "verify"));
}

TEST_CASE("identical invocations are byte-identical") {
  auto a = cli("search 8 2 --pattern \"ap(3)\"");
  auto b = cli("search 8 2 --pattern \"ap(3)\"");
  CHECK(a.exit_code == 0);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);

  auto x = cli("extract --set \"mod 0 3\" --mode triple --oracle-w 1000 --oracle-tau 250");
  auto y = cli("extract --set \"mod 0 3\" --mode triple --oracle-w 1000 --oracle-tau 250");
  CHECK(x.out == y.out);

  auto p = cli("pattern-number 2 --pattern \"brauer(1)\"");
  auto q = cli("pattern-number 2 --pattern \"brauer(1)\"");
  CHECK(p.out == q.out);
  CHECK(p.out == "5\n");
}

TEST_CASE("exit codes are a function of the printed outcome") {
  // verify over a sweep: exit 0 iff a witness line was printed, 1 iff NONE
  for (int n = 3; n <= 6; ++n) {
    std::string header = std::to_string(n) + " 2\n";
    std::string evens, blocks;
    for (int v = 1; v <= n; ++v) {
      evens += (v % 2 == 0 ? "1 " : "0 ");
      blocks += (v <= n / 2 ? "0 " : "1 ");
    }
    for (std::string body : {evens, blocks}) {
      body.back() = '\n';
      put_file("cli_sweep.txt", header + body);
      auto r = cli("verify cli_sweep.txt --pattern schur");
      if (r.out == "NONE\n")
        CHECK(r.exit_code == 1);
      else {
        CHECK(contains(r.out, "schur slots="));
        CHECK(r.exit_code == 0);
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    auto r = cli("search " + std::to_string(n) + " 2 --pattern schur");
    if (r.out == "EXHAUSTED\n")
      CHECK(r.exit_code == 1);
    else
      CHECK(r.exit_code == 0);
  }
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <exppat_cli> <dimacs_solve> [doctest options]\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];
  g_solver = argv[2];
  std::vector<char*> rest;
  rest.push_back(argv[0]);
  for (int i = 3; i < argc; ++i) rest.push_back(argv[i]);
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
