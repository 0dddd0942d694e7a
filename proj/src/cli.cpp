#include "tl/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <memory>

#include "tl/disk_cache.hpp"
#include "tl/errors.hpp"
#include "tl/projectors.hpp"
#include "tl/serialize.hpp"
#include "tl/skein.hpp"
#include "tl/verify.hpp"

namespace tl {

namespace {

using nlohmann::json;

class BoundsExceeded : public Error {
 public:
  using Error::Error;
};

struct Session {
  Config config;
  std::shared_ptr<DiskCache> disk;
  std::unique_ptr<ProjectorCache> cache;
  std::ostream& out;

  void check_n(int n, const char* what) const {
    if (n < 0) throw DomainError(std::string(what) + " must be nonnegative");
    if (n > config.max_n) {
      throw BoundsExceeded(std::string(what) + " = " + std::to_string(n) + " exceeds --max-n " +
                           std::to_string(config.max_n));
    }
  }

  void print(const Morphism& m) const {
    switch (config.output) {
      case OutputFormat::json: out << to_json(m).dump(2) << "\n"; break;
      case OutputFormat::ascii: out << to_ascii(m); break;
      case OutputFormat::text: out << to_text(m, config.series_order); break;
    }
  }

  void print(const Scalar& s) const {
    if (config.output == OutputFormat::json) {
      out << to_json(s).dump(2) << "\n";
      return;
    }
    out << to_string(s) << "\n";
    if (config.series_order > 0) {
      try {
        out << "~ " << series_to_string(s, config.series_order) << "\n";
      } catch (const NotExpandable&) {
        out << "~ (no expansion in Z[q^-1][[q]])\n";
      }
    }
  }

  SignSeq sequence(const std::string& text) const {
    SignSeq e = SignSeq::parse(text);
    check_n(e.length(), "sequence length");
    if (e.length() < 1 || !is_admissible(e)) {
      throw DomainError("sequence " + e.to_string() + " is not admissible");
    }
    return e;
  }
};

OutputFormat parse_output(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "ascii" || s == "ascii-art") return OutputFormat::ascii;
  return OutputFormat::text;
}

int cmd_verify(Session& s, int n, const std::string& suite_name) {
  s.check_n(n, "n");
  const Suite suite = parse_suite(suite_name);
  const Report report = run_suite(n, suite, *s.cache);
  if (s.config.output == OutputFormat::json) {
    json doc = to_json(report);
    doc["n"] = n;
    doc["suite"] = suite_name;
    s.out << doc.dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      s.out << (c.pass ? "PASS " : "FAIL ") << c.check << " " << c.params.dump();
      if (c.witness) s.out << " witness=" << c.witness->dump();
      s.out << "\n";
    }
    s.out << (report.passed() ? "all " : "some ") << report.checks.size()
          << (report.passed() ? " checks passed\n" : " checks, at least one FAILED\n");
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_twist(Session& s, int n, const std::string& word) {
  s.check_n(n, "n");
  if (!word.empty()) {
    const BraidWord w = BraidWord::parse(word, n);
    s.print(resolve_braid(w));
    return kExitOk;
  }
  const Morphism twist = resolve_braid(full_twist(n));
  std::vector<std::pair<int, Scalar>> eigen;
  for (int k = n % 2; k <= n; k += 2) {
    eigen.emplace_back(k, eigenvalue_on(twist, higher_projector(n, k, *s.cache)));
  }
  if (s.config.output == OutputFormat::json) {
    json values = json::array();
    for (const auto& [k, v] : eigen) values.push_back({{"k", k}, {"eigenvalue", to_json(v)}});
    s.out << json{{"n", n},
                  {"word", full_twist(n).to_string()},
                  {"morphism", to_json(twist)},
                  {"eigenvalues", values}}
                 .dump(2)
          << "\n";
    return kExitOk;
  }
  s.out << "full twist " << full_twist(n).to_string() << "\n";
  s.print(twist);
  for (const auto& [k, v] : eigen) s.out << "eigenvalue on p_{" << n << "," << k << "}: " << to_string(v) << "\n";
  return kExitOk;
}

Morphism trace_target(Session& s, const std::vector<std::string>& args, int strands) {
  auto number = [&](std::size_t i) {
    if (i >= args.size()) throw ParseError("trace: missing argument");
    try {
      std::size_t used = 0;
      const int v = std::stoi(args[i], &used);
      if (used != args[i].size()) throw ParseError("trace: bad integer '" + args[i] + "'");
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("trace: bad integer '" + args[i] + "'");
    }
  };
  if (args.empty()) throw ParseError("trace: expected jw|peps|pnk|braid");
  const std::string& kind = args[0];
  if (kind == "jw" && args.size() == 2) {
    const int n = number(1);
    s.check_n(n, "n");
    return jones_wenzl(n, *s.cache);
  }
  if (kind == "pnk" && args.size() == 3) {
    const int n = number(1), k = number(2);
    s.check_n(n, "n");
    return higher_projector(n, k, *s.cache);
  }
  if ((kind == "peps" || kind == "qeps") && args.size() == 2) {
    const SignSeq e = s.sequence(args[1]);
    return kind == "peps" ? p_eps(e, *s.cache) : q_elem(e, *s.cache);
  }
  if (kind == "braid" && args.size() == 2) {
    const BraidWord w = BraidWord::parse(args[1], strands);
    s.check_n(w.strands(), "strands");
    return resolve_braid(w);
  }
  throw ParseError("trace: expected 'jw N', 'pnk N K', 'peps SEQ', 'qeps SEQ' or 'braid WORD'");
}

int cmd_cache(Session& s, const std::string& action, int up_to) {
  if (!s.disk) throw DomainError("cache: the disk cache is disabled (--cache-dir none)");
  if (action == "clear") {
    const std::size_t removed = s.disk->clear();
    if (s.config.output == OutputFormat::json) {
      s.out << json{{"removed", removed}}.dump(2) << "\n";
    } else {
      s.out << "removed " << removed << " entries from " << s.disk->dir().string() << "\n";
    }
    return kExitOk;
  }
  if (action == "stat") {
    const DiskCache::Stats st = s.disk->stat();
    if (s.config.output == OutputFormat::json) {
      s.out << json{{"dir", s.disk->dir().string()},
                    {"jw", st.jw},
                    {"peps", st.peps},
                    {"files", st.files},
                    {"bytes", st.bytes}}
                   .dump(2)
            << "\n";
    } else {
      s.out << s.disk->dir().string() << ": " << st.jw << " jw, " << st.peps << " peps, "
            << st.files << " files, " << st.bytes << " bytes\n";
    }
    return kExitOk;
  }
  if (action == "warm") {
    if (up_to < 1) throw DomainError("cache warm: need N >= 1");
    s.check_n(up_to, "N");
    std::size_t count = 0;
    for (int n = 1; n <= up_to; ++n) {
      const std::string key = jw_key(n);
      if (!s.disk->load(key)) s.disk->store(key, jones_wenzl(n, *s.cache));
      ++count;
      for (const auto& e : enumerate_seqs(n)) {
        const std::string pkey = peps_key(e);
        if (!s.disk->load(pkey)) s.disk->store(pkey, p_eps(e, *s.cache));
        ++count;
      }
    }
    s.out << "warmed " << count << " entries in " << s.disk->dir().string() << "\n";
    return kExitOk;
  }
  throw DomainError("cache: unknown action '" + action + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Temperley-Lieb projector calculator", "tlcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "text", cache_dir, convention = "default";
  int max_n = 8, series_order = 0;
  app.add_option("--output", output, "text | json | ascii")
      ->check(CLI::IsMember({"text", "json", "ascii", "ascii-art"}));
  app.add_option("--cache-dir", cache_dir,
                 std::string("Projector cache directory, 'none' to disable (env ") +
                     kCacheDirEnv + ")");
  app.add_option("--max-n", max_n, "Largest strand count accepted")->check(CLI::PositiveNumber);
  app.add_option("--series-order", series_order, "Show q-series of coefficients up to q^N")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--convention", convention, "Crossing convention (only 'default')")
      ->check(CLI::IsMember({"default"}));

  int n = 0, k = 0, up_to = 0;
  std::string seq, suite = "all", word, action;
  int strands = 0;
  std::vector<std::string> trace_args;

  auto* jw = app.add_subcommand("jw", "Jones-Wenzl projector p_n");
  jw->add_option("n", n)->required();
  auto* peps = app.add_subcommand("peps", "Idempotent p_e for an admissible sequence");
  peps->add_option("sequence", seq)->required();
  auto* qeps = app.add_subcommand("qeps", "Element q_e = t_e composed with its reflection");
  qeps->add_option("sequence", seq)->required();
  auto* feps = app.add_subcommand("feps", "Scalar f_e with p_e = f_e q_e");
  feps->add_option("sequence", seq)->required();
  auto* pnk = app.add_subcommand("pnk", "Higher order projector p_{n,k}");
  pnk->add_option("n", n)->required();
  pnk->add_option("k", k)->required();
  auto* verify = app.add_subcommand("verify", "Check the projector identities up to n strands");
  verify->add_option("n", n)->required();
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"all", "resolution", "characterization", "slide", "branching", "twist", "trace"}));
  auto* twist = app.add_subcommand("twist", "Resolved full twist and its eigenvalues");
  twist->add_option("n", n)->required();
  twist->add_option("--word", word, "Resolve this braid word instead, e.g. 's1 s2^-1'");
  auto* trace = app.add_subcommand("trace", "Markov trace of jw N | pnk N K | peps SEQ | braid W");
  trace->add_option("what", trace_args)->required()->expected(1, 3);
  trace->add_option("--strands", strands, "Strand count for a braid word");
  auto* cache = app.add_subcommand("cache", "Manage the on-disk projector cache");
  cache->add_option("action", action)->required()->check(CLI::IsMember({"warm", "clear", "stat"}));
  cache->add_option("n", up_to, "Largest strand count to warm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tlcalc: " << e.what() << "\n";
    return kExitBadInput;
  }

  Session s{Config{}, nullptr, nullptr, out};
  s.config.max_n = max_n;
  s.config.output = parse_output(output);
  s.config.series_order = series_order;
  if (cache_dir.empty()) {
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) cache_dir = env;
  }
  if (cache_dir.empty()) {
    const char* home = std::getenv("HOME");
    cache_dir = home && *home ? std::string(home) + "/.cache/tlcalc" : "none";
  }
  if (cache_dir != "none") {
    s.config.cache_dir = cache_dir;
    s.disk = std::make_shared<DiskCache>(cache_dir);
    s.cache = std::make_unique<ProjectorCache>(s.disk);
  } else {
    s.cache = std::make_unique<ProjectorCache>();
  }

  try {
    if (*jw) {
      s.check_n(n, "n");
      s.print(jones_wenzl(n, *s.cache));
    } else if (*peps) {
      s.print(p_eps(s.sequence(seq), *s.cache));
    } else if (*qeps) {
      s.print(q_elem(s.sequence(seq), *s.cache));
    } else if (*feps) {
      s.print(f_coeff(s.sequence(seq)));
    } else if (*pnk) {
      s.check_n(n, "n");
      s.print(higher_projector(n, k, *s.cache));
    } else if (*verify) {
      return cmd_verify(s, n, suite);
    } else if (*twist) {
      return cmd_twist(s, n, word);
    } else if (*trace) {
      s.print(markov_trace(trace_target(s, trace_args, strands)));
    } else if (*cache) {
      return cmd_cache(s, action, up_to);
    }
  } catch (const BoundsExceeded& e) {
    err << "tlcalc: " << e.what() << "\n";
    return kExitBounds;
  } catch (const CacheIoError& e) {
    err << "tlcalc: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "tlcalc: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace tl
