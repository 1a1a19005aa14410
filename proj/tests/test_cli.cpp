#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

// End-to-end runs of the command-line driver against the shipped corpus.

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_raw(const std::string& cmd_prefix, const std::string& args) {
  static int counter = 0;
  std::string out_path = "/tmp/tpc_cli_out_" + std::to_string(counter);
  std::string err_path = "/tmp/tpc_cli_err_" + std::to_string(counter);
  ++counter;
  std::string cmd = cmd_prefix + " " + args + " >" + out_path + " 2>" + err_path;
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(raw);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

RunResult run(const std::string& args) { return run_raw(TPC_BINARY_DIR "/tpc", args); }

std::string corpus(const char* rel) { return std::string(TPC_SOURCE_DIR "/library/") + rel; }
std::string golden(const char* rel) {
  return slurp(std::string(TPC_SOURCE_DIR "/tests/golden/") + rel);
}

}  // namespace

TEST_CASE("check: well-formed modules exit 0") {
  CHECK(run("check " + corpus("tiny.tpc")).status == 0);
  CHECK(run("check " + corpus("algebra.tpc")).status == 0);
  CHECK(run("check " + corpus("addsemigroup.tpc")).status == 0);
}

TEST_CASE("check: the uncorrected clash example fails with the rule name") {
  RunResult r = run("check " + corpus("addsemigroup_bad.tpc"));
  CHECK(r.status == 1);
  CHECK(r.err.find("RenamingConditionViolated") != std::string::npos);
  CHECK(r.err.find("Eq.(3)") != std::string::npos);
}

TEST_CASE("check: parse errors report a location") {
  std::string path = "/tmp/tpc_cli_parse_error.tpc";
  {
    std::ofstream f(path);
    f << "A := Empty\nB := extend A by { e : }\n";
  }
  RunResult r = run("check " + path);
  CHECK(r.status == 1);
  CHECK(r.err.find(":2:") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("flatten matches the goldens byte for byte") {
  RunResult monoid = run("flatten " + corpus("tiny.tpc") + " --target Monoid");
  CHECK(monoid.status == 0);
  CHECK(monoid.out == golden("monoid_flat.txt"));

  RunResult semiring = run("flatten " + corpus("algebra.tpc") + " --target Semiring");
  CHECK(semiring.status == 0);
  CHECK(semiring.out == golden("semiring_flat.txt"));
}

TEST_CASE("flatten failure modes") {
  RunResult missing = run("flatten " + corpus("tiny.tpc") + " --target Nope");
  CHECK(missing.status == 1);

  // a bare view has no flattening
  RunResult view = run("flatten " + corpus("tiny.tpc") + " --target Flip");
  CHECK(view.status == 1);
  CHECK(view.err.find("SpecificationError") != std::string::npos);

  std::string path = "/tmp/tpc_cli_empty.tpc";
  {
    std::ofstream f(path);
    f << "X := Empty\n";
  }
  RunResult empty = run("flatten " + path + " --target X");
  CHECK(empty.status == 0);
  CHECK(empty.out.empty());
  std::remove(path.c_str());
}

TEST_CASE("graph output") {
  RunResult text = run("graph " + corpus("tiny.tpc") + " --format text");
  CHECK(text.status == 0);
  CHECK(text.out == golden("tiny_graph.txt"));

  RunResult dot = run("graph " + corpus("tiny.tpc") + " --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.find("digraph theories {") != std::string::npos);
  // solid embedding edge and the dashed Flip self-loop
  CHECK(dot.out.find("\"Carrier\" -> \"Magma\" [style=solid,label=\"Magma\"]") !=
        std::string::npos);
  CHECK(dot.out.find("\"Magma\" -> \"Magma\" [style=dashed,label=\"Flip\"]") !=
        std::string::npos);
}

TEST_CASE("graph of an empty module is an empty digraph") {
  std::string path = "/tmp/tpc_cli_none.tpc";
  {
    std::ofstream f(path);
    f << "-- nothing defined\n";
  }
  RunResult r = run("graph " + path + " --format dot");
  CHECK(r.status == 0);
  CHECK(r.out == "digraph theories {\n}\n");
  std::remove(path.c_str());
}

TEST_CASE("dump is byte-deterministic") {
  RunResult once = run("dump " + corpus("algebra.tpc"));
  RunResult twice = run("dump " + corpus("algebra.tpc"));
  CHECK(once.status == 0);
  CHECK(once.out == twice.out);
  CHECK(once.out.find("def Semiring") != std::string::npos);
  // identity assignments of recorded embeddings are spelled out
  CHECK(once.out.find("embedding: [ U |-> U") != std::string::npos);
}

TEST_CASE("dump of a one-definition module") {
  std::string path = "/tmp/tpc_cli_one.tpc";
  {
    std::ofstream f(path);
    f << "Carrier := Theory { U : type }\n";
  }
  RunResult r = run("dump " + path);
  CHECK(r.status == 0);
  CHECK(r.out ==
        "def Carrier\n"
        "  type: Emb\n"
        "  theory:\n"
        "    U : type\n"
        "  embedding: []\n");
  std::remove(path.c_str());
}

TEST_CASE("TPC_COLLATION accepts only codepoint") {
  RunResult bad = run_raw("TPC_COLLATION=locale " TPC_BINARY_DIR "/tpc",
                          "check " + corpus("tiny.tpc"));
  CHECK(bad.status == 1);
  RunResult good = run_raw("TPC_COLLATION=codepoint " TPC_BINARY_DIR "/tpc",
                           "check " + corpus("tiny.tpc"));
  CHECK(good.status == 0);
}
