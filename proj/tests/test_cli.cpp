#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "unaryp/format.hpp"
#include "unaryp/monoid.hpp"

using namespace unaryp;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args, std::string input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Temp file helper; removes itself when the test is done.
class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("unaryp_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + ".txt"))
                .string();
    std::ofstream f(path_, std::ios::binary);
    f << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const char* kExample2 = "alphabet: a\naxiom: a^2\nhom: a->a^3\n";

}  // namespace

TEST_CASE("parse echoes the normalized form") {
  TempFile file("alphabet: a\n# comment\naxiom: a^2 # done\nhom: a->a^6\nhom: a->a^4\n");
  auto result = run_cli({"parse", file.path()});
  CHECK(result.code == 0);
  CHECK(result.out == "alphabet: a\naxiom: a^2\nhom: a->a^6\nhom: a->a^4\n");
  CHECK(result.err.empty());
}

TEST_CASE("parse reports diagnostics on the error stream, exit 2") {
  TempFile file("alphabet: a\naxiom: a^0\nhom: a->a^2\n");
  auto result = run_cli({"parse", file.path()});
  CHECK(result.code == 2);
  CHECK(result.out.empty());
  CHECK(result.err.find(":2:") != std::string::npos);
  CHECK(result.err.find("empty axiom") != std::string::npos);
}

TEST_CASE("parse --json emits the JSON mirror") {
  TempFile file(kExample2);
  auto result = run_cli({"parse", "--json", file.path()});
  CHECK(result.code == 0);
  CHECK(result.out.find("\"alphabet\"") != std::string::npos);
  // and the mirror parses back
  auto round = parse_system(result.out);
  REQUIRE(round.ok());
  CHECK(serialize(round.document->system) == std::string(kExample2));
}

TEST_CASE("reading from standard input") {
  auto result = run_cli({"size", "-"}, kExample2);
  CHECK(result.code == 0);
  CHECK(result.out == "5\n");
}

TEST_CASE("enum star and plus") {
  TempFile file(kExample2);
  auto star = run_cli({"enum", "--mode", "star", "--bound", "60", file.path()});
  CHECK(star.code == 0);
  CHECK(star.out == "2\n6\n18\n54\n");
  auto plus = run_cli({"enum", "--mode", "plus", "--bound", "60", file.path()});
  CHECK(plus.out == "6\n18\n54\n");
  auto strings = run_cli({"enum", "--bound", "7", "--as-string", file.path()});
  CHECK(strings.out == "aa\naaaaaa\n");

  auto bad = run_cli({"enum", "--bound", "0", file.path()});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
}

TEST_CASE("enum prints general members as exponent lines") {
  auto family = run_cli({"family", "prime-power", "--n", "2"});
  REQUIRE(family.code == 0);
  auto result = run_cli({"enum", "--bound", "5", "-"}, family.out);
  CHECK(result.code == 0);
  CHECK(result.out == "a1^1 a2^1\na1^1 a2^3\na1^2 a2^1\na1^2 a2^3\na1^4 a2^1\n");
  auto strings = run_cli({"enum", "--bound", "5", "--as-string", "-"}, family.out);
  CHECK(strings.out == "a1a2\na1a2a2a2\na1a1a2\na1a1a2a2a2\na1a1a1a1a2\n");
}

TEST_CASE("simulate agrees with enum") {
  TempFile file(kExample2);
  auto simulated = run_cli({"simulate", "--bound", "10000", file.path()});
  auto enumerated = run_cli({"enum", "--bound", "10000", file.path()});
  CHECK(simulated.code == 0);
  CHECK(simulated.out == enumerated.out);
}

TEST_CASE("member reports witnesses and exit codes") {
  TempFile file(kExample2);
  auto yes = run_cli({"member", "--mode", "star", "-m", "54", file.path()});
  CHECK(yes.code == 0);
  CHECK(yes.out == "3\n");
  auto no = run_cli({"member", "--mode", "star", "-m", "4", file.path()});
  CHECK(no.code == 1);
  CHECK(no.out == "no\n");
  CHECK(no.err.empty());

  TempFile rival("alphabet: a\naxiom: a^1\nhom: a->a^2\n");
  auto plus = run_cli({"member", "--mode", "plus", "-m", "4", rival.path()});
  CHECK(plus.code == 0);
  CHECK(plus.out == "2\n");

  auto zero = run_cli({"member", "-m", "0", file.path()});
  CHECK(zero.code == 2);
}

TEST_CASE("canon prints the serialized canonical form") {
  TempFile file("alphabet: a\naxiom: a^2\nhom: a->a^6\nhom: a->a^4\nhom: a->a^24\n");
  auto result = run_cli({"canon", file.path()});
  CHECK(result.code == 0);
  CHECK(result.out == "offset: 2\ngen: 4\ngen: 6\n");
}

TEST_CASE("minimize writes a file that re-canonicalizes identically") {
  TempFile file("alphabet: a\naxiom: a^2\nhom: a->a^4\nhom: a->a^16\nhom: a->a^1\n");
  std::string out_path = std::filesystem::temp_directory_path() / "unaryp_min_out.txt";
  auto result = run_cli({"minimize", file.path(), "-o", out_path});
  CHECK(result.code == 0);
  std::ifstream f(out_path);
  std::stringstream buffer;
  buffer << f.rdbuf();
  std::remove(out_path.c_str());
  CHECK(buffer.str() == "alphabet: a\naxiom: a^2\nhom: a->a^4\n");

  auto reparsed = parse_system(buffer.str());
  REQUIRE(reparsed.ok());
  auto unary = as_unary(reparsed.document->system);
  REQUIRE(unary.has_value());
  CHECK(canonicalize(*unary) == canonicalize(UnaryPSystem{BigInt(2), {BigInt(4), BigInt(16), BigInt(1)}}));
}

TEST_CASE("equiv distinguishes and witnesses") {
  TempFile a("alphabet: a\naxiom: a^2\nhom: a->a^4\n");
  TempFile b("alphabet: a\naxiom: a^2\nhom: a->a^4\nhom: a->a^16\n");
  auto same = run_cli({"equiv", "--mode", "star", a.path(), b.path()});
  CHECK(same.code == 0);
  CHECK(same.out == "equivalent\n");

  TempFile c("alphabet: a\naxiom: a^3\nhom: a->a^2\n");
  auto diff = run_cli({"equiv", "--mode", "star", a.path(), c.path()});
  CHECK(diff.code == 1);
  CHECK(diff.out.find("not equivalent") != std::string::npos);
  CHECK(diff.out.find("distinguishing member: 2 (first input only)") != std::string::npos);

  // at-least-once vs any-number comparison via the dedicated mode
  TempFile d("alphabet: a\naxiom: a^3\nhom: a->a^2\n");
  TempFile e("alphabet: a\naxiom: a^6\nhom: a->a^2\n");
  auto mixed = run_cli({"equiv", "--mode", "plus-star", d.path(), e.path()});
  CHECK(mixed.code == 0);
  CHECK(mixed.out == "equivalent\n");
}

TEST_CASE("equiv rejects non-unary input") {
  auto family = run_cli({"family", "prime-power", "--n", "2"});
  TempFile a(family.out);
  TempFile b(family.out);
  auto result = run_cli({"equiv", a.path(), b.path()});
  CHECK(result.code == 2);
  CHECK(result.out.empty());
  CHECK(result.err.find("unary") != std::string::npos);
}

TEST_CASE("convert plus-to-star") {
  TempFile file("alphabet: a\naxiom: a^3\nhom: a->a^2\n");
  auto result = run_cli({"convert", "plus-to-star", file.path()});
  CHECK(result.code == 0);
  CHECK(result.out == "alphabet: a\naxiom: a^6\nhom: a->a^2\n");
}

TEST_CASE("permute") {
  TempFile file("alphabet: a\naxiom: a^1\nhom: a->a^2\nhom: a->a^3\nhom: a->a^5\n");
  auto result = run_cli({"permute", "--order", "3,1,2", file.path()});
  CHECK(result.code == 0);
  CHECK(result.out == "alphabet: a\naxiom: a^1\nhom: a->a^5\nhom: a->a^2\nhom: a->a^3\n");

  auto bad = run_cli({"permute", "--order", "1,1,2", file.path()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("bijection") != std::string::npos);
}

TEST_CASE("reduce prints sizes and the bound check") {
  auto family = run_cli({"family", "worst-case", "--m", "3", "--n", "2"});
  REQUIRE(family.code == 0);
  CHECK(family.out == "alphabet: a\naxiom: a^3\nhom: a->a^3\nhom: a->a^3\n");
  auto result = run_cli({"reduce", "-"}, family.out);
  CHECK(result.code == 0);
  CHECK(result.out == "size 9 -> 12; bound 80: ok\n");

  auto twice = run_cli({"reduce", "--times", "2", "--machine", "-"},
                       run_cli({"family", "worst-case", "--m", "3", "--n", "3"}).out);
  CHECK(twice.code == 0);
  CHECK(twice.out ==
        "size 12 -> 15; bound 143: ok\n"
        "size 15 -> 30; bound 224: ok\n"
        "n=3 size=12\nn=2 size=15\nn=1 size=30\n");

  TempFile already("alphabet: a\naxiom: a^1\nhom: a->a^2\nhom: a->a^3\n");
  auto none = run_cli({"reduce", already.path()});
  CHECK(none.code == 1);
  CHECK(none.out == "no reducible column\n");
}

TEST_CASE("classify") {
  TempFile singleton("alphabet: a\naxiom: a^7\nhom: a->a^1\n");
  auto result = run_cli({"classify", singleton.path()});
  CHECK(result.code == 0);
  CHECK(result.out == "singleton 7\n");

  TempFile infinite("alphabet: a\naxiom: a^1\nhom: a->a^2\n");
  result = run_cli({"classify", infinite.path()});
  CHECK(result.out == "not context-free\n");
}

TEST_CASE("family validation") {
  auto bad = run_cli({"family", "worst-case", "--m", "1", "--n", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"enum", "--bound", "10", "/nonexistent/file"}).code == 2);
  auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("minimize") != std::string::npos);
}

TEST_CASE("only one stdin input allowed") {
  auto result = run_cli({"equiv", "-", "-"}, kExample2);
  CHECK(result.code == 2);
  CHECK(result.err.find("standard input") != std::string::npos);
}
