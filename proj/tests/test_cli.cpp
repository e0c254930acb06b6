// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult runCli(const std::string& args) {
  std::string command = std::string(AFA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buffer[4096];
  while (size_t n = fread(buffer, 1, sizeof(buffer), pipe)) result.out.append(buffer, n);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const fs::path& workDir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "afa_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (workDir() / name).string(); }

void writeFile(const std::string& name, const std::string& text) {
  std::ofstream out(workDir() / name);
  out << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const char* kUnaryDocument = R"({
  "format": "afa-v1",
  "kind": "affine",
  "alphabet": ["a"],
  "states": 3,
  "initial": ["1", "0", "0"],
  "accepting": [0],
  "transitions": {
    "a": [["1", "0", "0"], ["1", "1", "0"], ["-1", "0", "1"]]
  }
})";

}  // namespace

TEST_CASE("gallery exports validate cleanly") {
  CHECK(runCli("gallery eq -o " + path("eq.json")).code == 0);
  CHECK(runCli("gallery eq3 -o " + path("eq3.json")).code == 0);
  CHECK(runCli("gallery dfa-parity -o " + path("parity.json")).code == 0);
  CHECK(runCli("gallery constant --alpha 1 -o " + path("one.json")).code == 0);
  for (const char* name : {"eq.json", "eq3.json", "parity.json", "one.json"}) {
    CmdResult r = runCli("validate " + path(name));
    CAPTURE(name);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "valid"));
  }
}

TEST_CASE("validate rejects a broken file with the violation and exit 1") {
  writeFile("broken.json", R"({
    "format": "afa-v1", "kind": "affine", "alphabet": ["a"], "states": 1,
    "initial": ["2"], "accepting": [0], "transitions": {"a": [["1"]]}
  })");
  CmdResult r = runCli("validate " + path("broken.json"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "initial sums to 2"));
}

TEST_CASE("malformed documents and bad usage exit with 2") {
  writeFile("garbage.json", "{nope");
  CHECK(runCli("validate " + path("garbage.json")).code == 2);
  CHECK(runCli("eval " + path("missing.json")).code == 2);
  CHECK(runCli("frobnicate").code == 2);
  CHECK(runCli("--help").code == 0);
}

TEST_CASE("eval prints the exact value with a decimal rendering") {
  runCli("gallery eq -o " + path("eq.json"));
  CmdResult r = runCli("eval " + path("eq.json") + " --word aab");
  CHECK(r.code == 0);
  CHECK(r.out == "1/3 (0.333333)\n");
  CmdResult empty = runCli("eval " + path("eq.json"));
  CHECK(empty.out == "1 (1.000000)\n");
}

TEST_CASE("member reflects acceptance in output and exit code") {
  runCli("gallery eq -o " + path("eq.json"));
  CmdResult in = runCli("member " + path("eq.json") + " --word ab --cutpoint 1/2");
  CHECK(in.code == 0);
  CHECK(in.out == "true\n");
  CmdResult out = runCli("member " + path("eq.json") + " --word aab");
  CHECK(out.code == 1);
  CHECK(out.out == "false\n");
}

TEST_CASE("compose tensor, convex, complement, shift, amplify") {
  runCli("gallery eq -o " + path("eq.json"));
  runCli("gallery constant --alpha 1 -o " + path("one.json"));

  CHECK(runCli("compose tensor " + path("eq.json") + " " + path("eq.json") + " -o " +
               path("sq.json")).code == 0);
  CHECK(runCli("eval " + path("sq.json") + " --word aab").out == "1/9 (0.111111)\n");

  CHECK(runCli("compose convex " + path("eq.json") + " " + path("one.json") +
               " --alpha 1/3 -o " + path("mix.json")).code == 0);
  CHECK(runCli("eval " + path("mix.json") + " --word aab").out == "7/9 (0.777778)\n");

  CHECK(runCli("compose complement " + path("eq.json") + " -o " + path("not.json")).code == 0);
  CHECK(runCli("eval " + path("not.json") + " --word aab").out == "2/3 (0.666667)\n");

  CHECK(runCli("compose shift " + path("eq.json") + " --from 1/3 --to 1/2 -o " +
               path("shifted.json")).code == 0);
  CHECK(runCli("eval " + path("shifted.json") + " --word aab").out == "1/2 (0.500000)\n");

  CHECK(runCli("compose amplify " + path("eq.json") + " --rounds 1 -o " +
               path("boost.json")).code == 0);
  CHECK(runCli("eval " + path("boost.json") + " --word aab").out == "7/27 (0.259259)\n");
}

TEST_CASE("compose union and intersect") {
  runCli("gallery dfa-parity -o " + path("parity.json"));
  runCli("compose complement " + path("parity.json") + " -o " + path("odd.json"));
  CHECK(runCli("compose union " + path("parity.json") + " " + path("odd.json") + " -o " +
               path("u.json")).code == 0);
  CHECK(runCli("eval " + path("u.json") + " --word ab").out == "1/2 (0.500000)\n");
  CHECK(runCli("compose intersect " + path("parity.json") + " " + path("odd.json") + " -o " +
               path("i.json")).code == 0);
  CHECK(runCli("eval " + path("i.json") + " --word ab").out == "0 (0.000000)\n");
}

TEST_CASE("normalize canonical, bounded, and the full pipeline") {
  runCli("gallery eq -o " + path("eq.json"));
  CHECK(runCli("normalize canonical " + path("eq.json") + " -o " + path("canon.json")).code == 0);
  CHECK(runCli("eval " + path("canon.json") + " --word aab").out == "1/3 (0.333333)\n");

  CHECK(runCli("normalize bounded " + path("canon.json") + " -o " + path("bounded.json")).code ==
        0);
  CHECK(runCli("validate " + path("bounded.json")).code == 0);
  // bounded form without a canonical initial state is a precondition failure
  runCli("gallery constant --alpha 1/2 -o " + path("half.json"));
  CHECK(runCli("normalize bounded " + path("half.json") + " -o " + path("nope.json")).code == 2);

  CHECK(runCli("normalize full " + path("eq.json") + " --cutpoint 1/3 -o " +
               path("normal.json")).code == 0);
  CHECK(runCli("member " + path("normal.json") + " --word ab").code == 0);
  CHECK(runCli("member " + path("normal.json") + " --word aab").code == 1);
}

TEST_CASE("analyze density reports the prime counts") {
  CmdResult primes = runCli("analyze density --lang prime --max 1000");
  CHECK(primes.code == 0);
  CHECK(contains(primes.out, "members=168"));
  CHECK(contains(primes.out, "total=1001"));

  CmdResult cubes = runCli("analyze density --lang poly --coeffs 0 0 0 1 --max 1000");
  CHECK(cubes.code == 0);
  CHECK(contains(cubes.out, "members=11"));  // 0..10 cubed stay within 1000
}

TEST_CASE("analyze scan and progression on a unary automaton") {
  writeFile("unary.json", kUnaryDocument);
  CmdResult scan = runCli("analyze scan " + path("unary.json") + " --max-n 3 --exact --csv");
  CHECK(scan.code == 0);
  CHECK(contains(scan.out, "n,F_float,F_exact_num,F_exact_den"));
  CHECK(contains(scan.out, "2,0.2,1,5"));

  CmdResult prog = runCli("analyze progression " + path("unary.json") +
                          " --h 2 --q 3 --count 3 --exact");
  CHECK(prog.code == 0);
  CHECK(contains(prog.out, "n=2"));
  CHECK(contains(prog.out, "exact=1/5"));
  CHECK(contains(prog.out, "exact=1/11"));
  CHECK(contains(prog.out, "exact=1/17"));
}

TEST_CASE("analyze spectrum lists moduli and flags rational angles") {
  runCli("gallery eq -o " + path("eq.json"));
  CmdResult r = runCli("analyze spectrum " + path("eq.json") + " --symbol a");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "lambda="));
  CHECK(contains(r.out, "modulus=1.000000"));
  CHECK(contains(r.out, "angle~=0/1"));
}

TEST_CASE("analyze gap reports the separation of the witness") {
  runCli("gallery eq -o " + path("eq.json"));
  CmdResult r = runCli("analyze gap " + path("eq.json") + " --cutpoint 1/2 --max-len 5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "min_accepted=1"));
  CHECK(contains(r.out, "max_rejected=1/3"));
  CHECK(contains(r.out, "gap=2/3"));
}
