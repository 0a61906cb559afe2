// edsm: match / decide / gen / bench / oracle-check.
// Exit codes: 0 found (or success), 1 nothing found, 2 usage, parse or I/O error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edsm/edsm.hpp"
#include "edsm/oracle.hpp"

using namespace edsm;

namespace {

const std::map<std::string, MatchKind> kModes{
    {"exact", MatchKind::Exact}, {"hamming1", MatchKind::Hamming1}, {"edit1", MatchKind::Edit1}};
const std::map<std::string, AnchorAlgo> kAlgos{{"auto", AnchorAlgo::Auto},
                                               {"geom", AnchorAlgo::Geometric},
                                               {"grid", AnchorAlgo::Grid},
                                               {"errata", AnchorAlgo::Errata}};
const std::map<std::string, Task> kTasks{{"report", Task::Report}, {"decide", Task::Decide}};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct MatchArgs {
  std::string pattern, text;
  std::string mode = "edit1", task = "report", algo = "auto";
  bool verbose = false;
};

void add_match_flags(CLI::App* sub, MatchArgs& a) {
  sub->add_option("-p,--pattern", a.pattern, "pattern (bytes)")->required();
  sub->add_option("-t,--text", a.text, ".eds file, or - for stdin")->required();
  sub->add_option("--mode", a.mode, "exact | hamming1 | edit1")->check(CLI::IsMember(kModes));
  sub->add_option("--algo", a.algo, "auto | geom | grid | errata")->check(CLI::IsMember(kAlgos));
  sub->add_flag("--verbose", a.verbose, "summary on stderr");
}

int run_match(const MatchArgs& a) {
  const Pattern p = Pattern::from_string(a.pattern);
  const EDString t = parse_eds(slurp(a.text));
  const EngineConfig cfg{kModes.at(a.mode), kTasks.at(a.task), kAlgos.at(a.algo)};
  if (cfg.task == Task::Decide) {
    const bool yes = run_decision(p, t, cfg);
    std::cout << (yes ? "true" : "false") << '\n';
    return yes ? 0 : 1;
  }
  OnlineReporter rep(p, cfg);
  std::size_t count = 0;
  for (const auto& seg : t.segments())
    if (auto r = rep.feed(seg)) {
      std::cout << *r << '\n';
      ++count;
    }
  if (a.verbose)
    std::cerr << "n=" << t.length() << " N=" << t.size() << " m=" << p.size() << " reports=" << count << '\n';
  return count ? 0 : 1;
}

struct CheckArgs {
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  std::size_t max_n = 6, max_alts = 3, max_len = 4, max_m = 10;
  std::string alphabet = "ACGT";
  double eps_prob = 0.15;
};

int run_oracle_check(const CheckArgs& c) {
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::size_t> nd(1, c.max_n), md(1, c.max_m), ad(1, c.alphabet.size());
  std::size_t runs = 0;
  for (std::size_t it = 0; it < c.count; ++it) {
    GenParams g;
    g.n = nd(rng);
    g.max_alts = c.max_alts;
    g.max_len = c.max_len;
    g.alphabet = c.alphabet.substr(0, ad(rng));
    g.eps_prob = c.eps_prob;
    g.seed = rng();
    const EDString t = generate(g);
    const Pattern p = random_pattern(rng, g.alphabet, md(rng));
    for (MatchKind mode : {MatchKind::Exact, MatchKind::Hamming1, MatchKind::Edit1}) {
      const auto want = oracle::reports(p, t, mode);
      for (AnchorAlgo algo : {AnchorAlgo::Auto, AnchorAlgo::Geometric, AnchorAlgo::Grid, AnchorAlgo::Errata}) {
        if (algo == AnchorAlgo::Errata && mode == MatchKind::Edit1) continue;
        ++runs;
        const auto got = run_reporting(p, t, {mode, Task::Report, algo});
        const bool dec = run_decision(p, t, {mode, Task::Decide, algo});
        if (got != want || dec != !want.empty()) {
          std::cout << "FAIL after " << runs << " runs\n  pattern " << to_bytes(p.letters()) << "\n  text " << to_eds(t)
                    << "\n  mode " << to_string(mode) << " algo " << to_string(algo) << "\n  engine  ";
          for (const auto& r : got) std::cout << ' ' << r.end_segment << ':' << to_string(r.kind);
          std::cout << "\n  oracle  ";
          for (const auto& r : want) std::cout << ' ' << r.end_segment << ':' << to_string(r.kind);
          std::cout << "\n  decision " << dec << '\n';
          return 1;
        }
      }
    }
  }
  std::cout << "PASS " << c.count << " instances, " << runs << " engine runs\n";
  return 0;
}

struct BenchArgs {
  std::vector<std::size_t> sizes{1u << 15, 1u << 16, 1u << 17, 1u << 18};
  std::size_t m = 32, seg_size = 64, max_len = 8;
  std::uint64_t seed = 1;
  std::vector<std::string> algos{"geom", "grid"};
  std::string mode = "edit1";
};

int run_bench(const BenchArgs& b) {
  std::mt19937_64 rng(b.seed);
  const Pattern p = random_pattern(rng, "ACGT", b.m);
  std::cout << "n,m,N,mode,algo,seconds,reports\n";
  for (std::size_t size : b.sizes) {
    const EDString t = generate_sized(size, b.seg_size, b.max_len, "ACGT", b.seed + size);
    for (const auto& name : b.algos) {
      const AnchorAlgo algo = kAlgos.at(name);
      const auto t0 = std::chrono::steady_clock::now();
      const auto reps = run_reporting(p, t, {kModes.at(b.mode), Task::Report, algo});
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << t.length() << ',' << b.m << ',' << t.size() << ',' << b.mode << ',' << name << ','
                << s << ',' << reps.size() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern matching in elastic-degenerate texts with up to one error"};
  app.require_subcommand(1);

  MatchArgs ma;
  auto* match = app.add_subcommand("match", "report end positions, one per line: j<TAB>kind");
  add_match_flags(match, ma);
  match->add_option("--task", ma.task, "report | decide")->check(CLI::IsMember(kTasks));

  MatchArgs da;
  auto* decide = app.add_subcommand("decide", "print true/false");
  add_match_flags(decide, da);

  GenParams gp;
  std::string plant;
  auto* gen = app.add_subcommand("gen", "random .eds text on stdout");
  gen->add_option("--n", gp.n, "segments")->check(CLI::PositiveNumber);
  gen->add_option("--max-alts", gp.max_alts)->check(CLI::PositiveNumber);
  gen->add_option("--max-len", gp.max_len);
  gen->add_option("--alphabet", gp.alphabet);
  gen->add_option("--eps-prob", gp.eps_prob)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gp.seed);
  gen->add_option("--plant", plant, "pattern to embed");
  gen->add_flag("--plant-error", gp.plant_error, "inject one edit into the planted copy");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "CSV timings for an N-doubling series");
  bench->add_option("--sizes", ba.sizes, "target N values");
  bench->add_option("--m", ba.m)->check(CLI::PositiveNumber);
  bench->add_option("--seed", ba.seed);
  bench->add_option("--algos", ba.algos)->check(CLI::IsMember({"auto", "geom", "grid", "errata"}));
  bench->add_option("--mode", ba.mode)->check(CLI::IsMember(kModes));

  CheckArgs ca;
  auto* check = app.add_subcommand("oracle-check", "engine against the brute-force oracle");
  check->add_option("--count", ca.count);
  check->add_option("--seed", ca.seed);
  check->add_option("--max-n", ca.max_n)->check(CLI::Range(1, 8));
  check->add_option("--max-alts", ca.max_alts)->check(CLI::Range(1, 4));
  check->add_option("--max-len", ca.max_len)->check(CLI::Range(0, 5));
  check->add_option("--max-m", ca.max_m)->check(CLI::Range(1, 12));
  check->add_option("--alphabet", ca.alphabet);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*match) return run_match(ma);
    if (*decide) {
      da.task = "decide";
      return run_match(da);
    }
    if (*gen) {
      if (!plant.empty()) gp.plant = plant;
      std::cout << to_eds(generate(gp)) << '\n';
      return 0;
    }
    if (*bench) return run_bench(ba);
    if (*check) return run_oracle_check(ca);
  } catch (const EdsParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
