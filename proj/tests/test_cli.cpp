#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "support.hpp"
#include "tl/cli.hpp"
#include "tl/projectors.hpp"
#include "tl/serialize.hpp"

using namespace tl;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tlcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("tlcalc-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string str() const { return path_.string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, JonesWenzlText) {
  auto r = run({"--cache-dir", "none", "jw", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "TL(2,2), 2 terms\n  -q / (1 + q^2)  [b0-b1 t0-t1]\n  1 / 1  [b0-t0 b1-t1]\n");
}

TEST(Cli, PEpsJsonCarriesCoefficient) {
  auto r = run({"--cache-dir", "none", "--output", "json", "peps", "(1,1,1,-1)"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto m = morphism_from_json(json::parse(r.out));
  const Scalar f = Scalar::quantum(3) / Scalar::quantum(4);
  EXPECT_EQ(m, f * q_elem(SignSeq({1, 1, 1, -1})));
}

TEST(Cli, FEps) {
  auto r = run({"--cache-dir", "none", "feps", "(1,1,1,-1)"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "(q + q^3 + q^5) / (1 + q^2 + q^4 + q^6)\n");
}

TEST(Cli, TopRowMatchesJonesWenzl) {
  auto a = run({"--cache-dir", "none", "pnk", "4", "4"});
  auto b = run({"--cache-dir", "none", "jw", "4"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifySuites) {
  EXPECT_EQ(run({"--cache-dir", "none", "verify", "4", "--suite", "resolution"}).code, kExitOk);
  EXPECT_EQ(run({"--cache-dir", "none", "verify", "1", "--suite", "resolution"}).code, kExitOk);
  EXPECT_EQ(run({"--cache-dir", "none", "verify", "4", "--suite", "slide"}).code, kExitOk);
  EXPECT_EQ(run({"--cache-dir", "none", "verify", "4", "--suite", "trace"}).code, kExitOk);
}

TEST(Cli, VerifyAllOnlyTwistRatioFails) {
  // The linear eigenvalue-ratio law does not hold from three strands on, so
  // the full suite reports it; everything else must pass.
  auto r = run({"--cache-dir", "none", "--output", "json", "verify", "4"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  auto doc = json::parse(r.out);
  EXPECT_FALSE(doc["pass"].get<bool>());
  int failed = 0;
  for (const auto& c : doc["checks"]) {
    if (c["pass"].get<bool>()) continue;
    ++failed;
    EXPECT_EQ(c["check"], "twist.eigenvalue_ratio") << c.dump();
    EXPECT_TRUE(c.contains("witness"));
  }
  EXPECT_GT(failed, 0);
}

TEST(Cli, ExitCodesForBadInput) {
  EXPECT_EQ(run({"--cache-dir", "none", "peps", "(1,x)"}).code, kExitBadInput);
  EXPECT_EQ(run({"--cache-dir", "none", "peps", "(1,-1,-1)"}).code, kExitBadInput);
  EXPECT_EQ(run({"--cache-dir", "none", "pnk", "4", "3"}).code, kExitBadInput);
  EXPECT_EQ(run({"--cache-dir", "none", "bogus"}).code, kExitBadInput);
  EXPECT_EQ(run({"--cache-dir", "none"}).code, kExitBadInput);
  EXPECT_EQ(run({"--cache-dir", "none", "verify", "3", "--suite", "nope"}).code, kExitBadInput);
  EXPECT_EQ(run({"--cache-dir", "none", "--convention", "other", "jw", "2"}).code, kExitBadInput);
  EXPECT_EQ(run({"--cache-dir", "none", "twist", "3", "--word", "s1 s9"}).code, kExitBadInput);
  auto r = run({"--cache-dir", "none", "peps", "(1,x)"});
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ExitCodesForBounds) {
  EXPECT_EQ(run({"--cache-dir", "none", "jw", "9"}).code, kExitBounds);
  EXPECT_EQ(run({"--cache-dir", "none", "--max-n", "3", "jw", "4"}).code, kExitBounds);
  EXPECT_EQ(run({"--cache-dir", "none", "--max-n", "3", "peps", "(1,1,1,1)"}).code, kExitBounds);
  EXPECT_EQ(run({"--cache-dir", "none", "--max-n", "3", "jw", "3"}).code, kExitOk);
}

TEST(Cli, Twist) {
  auto r = run({"--cache-dir", "none", "twist", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("eigenvalue on p_{2,0}: q^-4 / 1"), std::string::npos);
  EXPECT_NE(r.out.find("eigenvalue on p_{2,2}: 1 / 1"), std::string::npos);
  auto w = run({"--cache-dir", "none", "--output", "json", "twist", "2", "--word", "s1 s1^-1"});
  ASSERT_EQ(w.code, kExitOk);
  EXPECT_EQ(morphism_from_json(json::parse(w.out)), Morphism::identity(2));
}

TEST(Cli, Trace) {
  auto r = run({"--cache-dir", "none", "trace", "jw", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "(q^-3 + q^-1 + q + q^3) / 1\n");
  auto j = run({"--cache-dir", "none", "--output", "json", "trace", "pnk", "2", "0"});
  ASSERT_EQ(j.code, kExitOk);
  EXPECT_EQ(scalar_from_json(json::parse(j.out)), Scalar(1));
  auto b = run({"--cache-dir", "none", "trace", "braid", "s1", "--strands", "2"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_EQ(run({"--cache-dir", "none", "trace", "nonsense"}).code, kExitBadInput);
}

TEST(Cli, SeriesOrder) {
  auto r = run({"--cache-dir", "none", "--series-order", "5", "peps", "(1,-1)"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("~ q - q^3 + q^5 + O(q^6)"), std::string::npos);
}

TEST(Cli, CacheWarmStatClear) {
  TempDir dir;
  auto warm = run({"--cache-dir", dir.str(), "cache", "warm", "5"});
  ASSERT_EQ(warm.code, kExitOk) << warm.err;

  std::size_t seqs = 0;
  for (int n = 1; n <= 5; ++n) seqs += enumerate_seqs(n).size();

  auto stat = run({"--cache-dir", dir.str(), "--output", "json", "cache", "stat"});
  ASSERT_EQ(stat.code, kExitOk);
  auto doc = json::parse(stat.out);
  EXPECT_EQ(doc["jw"].get<std::size_t>(), 5u);
  EXPECT_EQ(doc["peps"].get<std::size_t>(), seqs);
  EXPECT_EQ(doc["files"].get<std::size_t>(), 5u + seqs);

  // Warming again finds everything on disk.
  EXPECT_EQ(run({"--cache-dir", dir.str(), "cache", "warm", "5"}).code, kExitOk);
  auto stat2 = json::parse(run({"--cache-dir", dir.str(), "--output", "json", "cache", "stat"}).out);
  EXPECT_EQ(stat2["files"], doc["files"]);

  auto clear = run({"--cache-dir", dir.str(), "--output", "json", "cache", "clear"});
  EXPECT_EQ(clear.code, kExitOk);
  EXPECT_EQ(json::parse(clear.out)["removed"].get<std::size_t>(), 5u + seqs);
  auto again = run({"--cache-dir", dir.str(), "--output", "json", "cache", "clear"});
  EXPECT_EQ(again.code, kExitOk);
  EXPECT_EQ(json::parse(again.out)["removed"].get<std::size_t>(), 0u);
}

TEST(Cli, CachedOutputIsByteIdentical) {
  TempDir dir;
  ASSERT_EQ(run({"--cache-dir", dir.str(), "cache", "warm", "5"}).code, kExitOk);
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"peps", "(1,1,-1,1)"}, {"jw", "5"}, {"pnk", "5", "3"},
        {"qeps", "(1,-1,1,1)"}}) {
    std::vector<std::string> cached = {"--cache-dir", dir.str(), "--output", "json"};
    std::vector<std::string> fresh = {"--cache-dir", "none", "--output", "json"};
    cached.insert(cached.end(), cmd.begin(), cmd.end());
    fresh.insert(fresh.end(), cmd.begin(), cmd.end());
    auto a = run(cached);
    auto b = run(fresh);
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}

TEST(Cli, CorruptCacheFileIsIgnored) {
  TempDir dir;
  ASSERT_EQ(run({"--cache-dir", dir.str(), "jw", "3"}).code, kExitOk);
  bool corrupted = false;
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    std::ofstream(entry.path()) << "{ not json";
    corrupted = true;
  }
  ASSERT_TRUE(corrupted);
  auto a = run({"--cache-dir", dir.str(), "jw", "3"});
  auto b = run({"--cache-dir", "none", "jw", "3"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CacheDirFromEnvironment) {
  TempDir dir;
  ::setenv(kCacheDirEnv, dir.str().c_str(), 1);
  auto r = run({"jw", "3"});
  ::unsetenv(kCacheDirEnv);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_FALSE(fs::is_empty(dir.path()));
}

TEST(Cli, UnwritableCacheIsAnIoError) {
  TempDir dir;
  const fs::path blocker = dir.path() / "file";
  std::ofstream(blocker) << "x";
  auto r = run({"--cache-dir", (blocker / "sub").string(), "jw", "3"});
  EXPECT_EQ(r.code, kExitIo);
}

TEST(Cli, CacheCommandNeedsADirectory) {
  EXPECT_EQ(run({"--cache-dir", "none", "cache", "stat"}).code, kExitBadInput);
}

TEST(Cli, JsonIsDeterministic) {
  auto a = run({"--cache-dir", "none", "--output", "json", "verify", "3", "--suite", "resolution"});
  auto b = run({"--cache-dir", "none", "--output", "json", "verify", "3", "--suite", "resolution"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, kExitOk);
}
