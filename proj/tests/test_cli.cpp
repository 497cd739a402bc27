#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "infinitary/proof_io.hpp"

namespace fs = std::filesystem;
using infinitary::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Scratch directory removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("infinitary-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

const fs::path kGoldens = fs::path(INFINITARY_SOURCE_DIR) / "goldens";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check-proof") {
    auto ok = invoke({"check-proof", (kGoldens / "example1_n3.proof").string()});
    CHECK(ok.code == 0);
    TempDir tmp;
    auto bad = tmp.write("bad.proof", "step 1 p |- q by Axiom\n");
    auto r = invoke({"check-proof", bad});
    CHECK(r.code == 1);
    CHECK(r.out.find("step 1") != std::string::npos);
    auto syntax = tmp.write("syntax.proof", "step 1 p |- by Axiom\n");
    CHECK(invoke({"check-proof", syntax}).code == 2);
    CHECK(invoke({"check-proof", (tmp.path / "missing.proof").string()}).code == 2);
  }

  TEST_CASE("level option overrides nothing the script does not admit") {
    auto iwem = (kGoldens / "iwem_n2.proof").string();
    CHECK(invoke({"check-proof", iwem}).code == 0);
    CHECK(invoke({"check-proof", "--level", "Basic", iwem}).code == 1);
  }

  TEST_CASE("se-check") {
    CHECK(invoke({"se-check", (kGoldens / "example2_left.fml").string(), (kGoldens / "example2_right.fml").string()}).code == 0);
    auto r = invoke({"se-check", (kGoldens / "atom_p.fml").string(), (kGoldens / "double_negation_p.fml").string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("{p}") != std::string::npos);
  }

  TEST_CASE("stable-models") {
    TempDir tmp;
    auto f = tmp.write("lem.fml", "or{p; not p}\n");
    auto r = invoke({"stable-models", f});
    CHECK(r.code == 0);
    CHECK(r.out == "{}\np\n");
    auto big = std::string("and{");
    for (int k = 0; k < 25; ++k) big += (k ? "; a" : "a") + std::to_string(k);
    auto g = tmp.write("big.fml", big + "}\n");
    CHECK(invoke({"stable-models", g}).code == 3);
  }

  TEST_CASE("solve and ground") {
    auto intro = (kGoldens / "intro.lp").string();
    auto r = invoke({"solve", intro});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kGoldens / "intro.lp.expected"));
    for (const char* depth : {"2", "3", "4"}) CHECK(invoke({"solve", "--depth", depth, intro}).out == r.out);
    CHECK(invoke({"solve", "--depth", "1", intro}).code == 2);
    auto g = invoke({"ground", intro});
    CHECK(g.code == 0);
    CHECK(g.out.find("p(f(a))") != std::string::npos);
  }

  TEST_CASE("library and synthesize") {
    auto lib = invoke({"library", "example2", "--size", "2"});
    CHECK(lib.code == 0);
    auto script = infinitary::parseProofScript(lib.out);
    CHECK(script.level == infinitary::SystemLevel::Basic);
    CHECK(invoke({"library", "example1", "--size", "9"}).code == 3);
    CHECK(invoke({"library", "nonexistent"}).code == 2);
    CHECK(invoke({"library", "--list"}).out.find("iwem") != std::string::npos);

    TempDir tmp;
    auto taut = tmp.write("peirce.fml", "((p -> q) -> p) -> p\n");
    CHECK(invoke({"synthesize", taut}).code == 0);
    auto atomFile = tmp.write("p.fml", "p\n");
    CHECK(invoke({"synthesize", atomFile}).code == 1);
  }

  TEST_CASE("transform-reduct") {
    TempDir tmp;
    auto out = (tmp.path / "reduct.proof").string();
    auto r = invoke({"transform-reduct", (kGoldens / "example1_n2.proof").string(), "--interp", "p(0),p(1)", "-o", out});
    CHECK(r.code == 0);
    CHECK(invoke({"check-proof", out}).code == 0);
  }

  TEST_CASE("translate-aggregate") {
    auto r = invoke({"translate-aggregate", "--upper", "0", "--domain", "p(1); p(2)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("not and{p(1); p(2)}") != std::string::npos);
  }

  TEST_CASE("run reports") {
    auto r = invoke({"--records", "solve", (kGoldens / "intro.lp").string()});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verb"] == "solve");
    CHECK(j["outcome"] == "ok");
    CHECK(j["inputs_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"check-proof"}).code == 2);
  }

  TEST_CASE("config file") {
    TempDir tmp;
    auto cfg = tmp.write("run.cfg", "depth=3\n");
    CHECK(invoke({"--config", cfg, "solve", (kGoldens / "intro.lp").string()}).code == 0);
  }
}

TEST_SUITE("goldens") {
  TEST_CASE("emission is reproducible and matches the repository") {
    TempDir a, b;
    auto first = infinitary::cli::emitGoldens(a.path);
    auto second = infinitary::cli::emitGoldens(b.path);
    REQUIRE(first.size() == second.size());
    for (std::size_t k = 0; k < first.size(); ++k) {
      CAPTURE(first[k].filename().string());
      CHECK(slurp(first[k]) == slurp(second[k]));
      CHECK(slurp(first[k]) == slurp(kGoldens / first[k].filename()));
    }
  }

  TEST_CASE("every golden proof checks") {
    int proofs = 0;
    for (const auto& entry : fs::directory_iterator(kGoldens)) {
      if (entry.path().extension() != ".proof") continue;
      CAPTURE(entry.path().filename().string());
      CHECK(invoke({"check-proof", entry.path().string()}).code == 0);
      ++proofs;
    }
    CHECK(proofs >= 30);
  }
}
