// Acceptance gate: one PASS/FAIL line per criterion. Values are exact
// integers; the only tolerances are the wall-clock limits below.
//
// usage: hypertrans_acceptance <path-to-hypertrans-cli> [work-dir]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hypertrans/canonical.hpp"
#include "hypertrans/enumerate.hpp"
#include "hypertrans/extremal.hpp"
#include "hypertrans/families.hpp"
#include "hypertrans/hgr.hpp"
#include "hypertrans/report_json.hpp"
#include "hypertrans/transforms.hpp"
#include "test_support.hpp"

using namespace hypertrans;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<bool(std::ostream&)> check;
};

const std::vector<std::pair<int, int>> kDeskScale{{3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs the CLI with stdout and stderr captured to `out`; returns the exit status.
int run_cli(const std::string& cli, const std::string& args, const fs::path& out) {
  std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Sigma brute_min(int k, int m) { return enumerate_unicyclic_bruteforce(k, m).classes.front().sigma; }
Sigma brute_max(int k, int m) { return enumerate_unicyclic_bruteforce(k, m).classes.back().sigma; }

// 2 * (k-1)m[(k-1)m - 1 - k/2], kept integral, plus 2 when the girth-2 case applies.
Sigma doubled_displayed_minimum(int k, int m) {
  Sigma a = static_cast<Sigma>(k - 1) * m;
  return a * (2 * a - 2 - k) + (m == 3 ? 0 : 2);
}

// `verify` through the command line: exit status 0 and the reported extremum.
bool cli_verify(const std::string& cli, const fs::path& work, const std::string& theorem, int k, int m,
                Sigma expected) {
  fs::create_directories(work);
  auto stem = work / ("verify_" + theorem + "_" + std::to_string(k) + "_" + std::to_string(m));
  auto json_path = stem.string() + ".json";
  int rc = run_cli(cli,
                   "verify --theorem " + theorem + " --k " + std::to_string(k) + " --m " + std::to_string(m) +
                       " --json \"" + json_path + "\" --witness-dir \"" + work.string() + "\"",
                   stem.string() + ".stdout");
  if (rc != 0) return false;
  auto report = nlohmann::json::parse(slurp(json_path));
  return report.at("pass") == true && report.at("enumerated_value") == expected;
}

bool theorem_min(std::ostream& log, const std::string& cli, const fs::path& work) {
  const std::vector<Sigma> expected{7, 21, 45, 19, 54};
  bool ok = true;
  for (std::size_t i = 0; i < kDeskScale.size(); ++i) {
    auto [k, m] = kDeskScale[i];
    auto r = verify_theorem_min(k, m);
    Sigma brute = brute_min(k, m);
    auto named = m == 3 ? loose_cycle(k, 3) : cg_star(k, 2, std::vector<int>{m - 2, 0});
    bool good = r.pass && r.unique && r.enumerated_value == expected[i] && brute == expected[i] &&
                doubled_displayed_minimum(k, m) == 2 * expected[i] &&
                are_isomorphic(r.extremal_graphs.at(0), named) &&
                cli_verify(cli, work, "min", k, m, expected[i]);
    log << "    (" << k << "," << m << ") min " << r.enumerated_value << " brute " << brute << " expected "
        << expected[i] << (good ? "" : "  <-- mismatch") << "\n";
    ok = ok && good;
  }
  return ok;
}

bool theorem_max(std::ostream& log, const std::string& cli, const fs::path& work) {
  bool ok = true;
  for (auto [k, m] : kDeskScale) {
    auto r = verify_theorem_max(k, m);
    Sigma brute = brute_max(k, m);
    auto named = tilde_c2(k, (m - 2) / 2, (m - 1) / 2);
    bool good = r.pass && r.unique && r.enumerated_value == brute &&
                are_isomorphic(r.extremal_graphs.at(0), named) && oracle::oracle_sigma(named) == brute &&
                cli_verify(cli, work, "max", k, m, brute);
    if (k == 3) good = good && brute == std::vector<Sigma>{7, 24, 57}.at(m - 2);
    log << "    (" << k << "," << m << ") max " << r.enumerated_value << " brute " << brute
        << (good ? "" : "  <-- mismatch") << "\n";
    ok = ok && good;
  }
  return ok;
}

bool tilde_c2_exchange(std::ostream& log) {
  std::vector<int> ks{3, 4, 5};
  auto report = tilde_c2_exchange_exhaustive(ks, 10);
  int independent = 0;
  bool ok = report.pass();
  for (int k : ks)
    for (int p = 1; p <= 10; ++p)
      for (int q = p + 2; p + q <= 10; ++q) {
        Sigma delta = oracle::oracle_sigma(tilde_c2(k, p + 1, q - 1)) - oracle::oracle_sigma(tilde_c2(k, p, q));
        ok = ok && delta == static_cast<Sigma>(k - 1) * (q - p - 1) &&
             tilde_c2_boundary_formula(k, p, q) == tilde_c2_boundary_bruteforce(k, p, q);
        ++independent;
      }
  ok = ok && report.trials == independent;
  log << "    " << report.passed() << "/" << report.trials << " library checks, " << independent
      << " oracle checks\n";
  return ok;
}

bool seeded_lemma_checks(std::ostream& log, const fs::path& witness_dir) {
  bool ok = true;
  for (int id = 1; id <= 5; ++id) {
    auto r = check_lemma(id, 100, 42);
    int oracle_agree = 0;
    for (const auto& t : r.entries) {
      bool agree = t.sigma_before == oracle::oracle_sigma(t.instance) &&
                   t.sigma_after == oracle::oracle_sigma(t.transformed);
      oracle_agree += agree;
      if (!t.satisfied || !agree) {
        fs::create_directories(witness_dir);
        auto stem = "lemma" + std::to_string(id) + "_trial" + std::to_string(t.index);
        write_file_atomic(witness_dir / (stem + "_before.hgr"), write_hgr(t.instance));
        write_file_atomic(witness_dir / (stem + "_after.hgr"), write_hgr(t.transformed));
        log << "    witness written: " << (witness_dir / stem).string() << "_*.hgr\n";
      }
    }
    bool good = r.pass() && r.trials == 100 && oracle_agree == 100;
    log << "    lemma " << id << ": " << r.passed() << "/100 satisfied, " << oracle_agree
        << "/100 sigma values match oracle\n";
    ok = ok && good;
  }
  return ok;
}

bool enumerators_agree(std::ostream& log) {
  bool ok = true;
  std::vector<std::pair<int, int>> cases = kDeskScale;
  cases.insert(cases.end(), {{2, 5}, {2, 6}});
  for (auto [k, m] : cases) {
    std::set<std::string> a, b;
    for (const auto& c : enumerate_unicyclic(k, m).classes) a.insert(c.key.hex());
    for (const auto& c : enumerate_unicyclic_bruteforce(k, m).classes) b.insert(c.key.hex());
    log << "    (" << k << "," << m << ") constructive " << a.size() << " brute " << b.size()
        << (a == b ? "" : "  <-- differ") << "\n";
    ok = ok && a == b && !a.empty();
  }
  return ok;
}

bool graph_remark(std::ostream& log) {
  bool ok = true;
  for (int m : {5, 6}) {
    auto r = graph_remark_check(m);
    bool diam = true;
    for (const auto& c : r.minimizers) diam = diam && c.diameter <= 2;
    bool documented = (r.named_minimizer_agrees && r.named_maximizer_agrees) || !r.notes.empty();
    bool good = r.pass && r.min_value == static_cast<Sigma>(m) * (m - 2) && diam && documented;
    log << "    m=" << m << " min " << r.min_value << " max " << r.max_value << ", " << r.minimizers.size()
        << " minimizer(s), " << r.notes.size() << " note(s)\n";
    ok = ok && good;
  }
  return ok;
}

bool metric_oracle(std::ostream& log) {
  std::mt19937_64 rng(20240601);
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    int k = 2 + static_cast<int>(rng() % 4);
    int n = k + static_cast<int>(rng() % (31 - k));
    auto g = oracle::random_connected(k, n, static_cast<int>(rng() % 6), rng);
    auto fw = oracle::floyd_warshall(g);
    auto d = all_pairs(g);
    bool same = true;
    for (Vertex u = 0; u < n && same; ++u)
      for (Vertex v = 0; v < n; ++v) same = same && d.at(u, v) == fw[u][v];
    agree += same;
  }
  int identity = 0;
  for (int i = 0; i < 100; ++i) {
    int k = 2 + static_cast<int>(rng() % 4);
    auto g = oracle::random_connected(k, k + static_cast<int>(rng() % (31 - k)), 2, rng);
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < g.n(); ++v) (rng() % 2 ? a : b).push_back(v);
    auto d = all_pairs(g);
    identity += sigma_subset(d, a) + sigma_subset(d, b) + sigma_between(d, a, b) == oracle::oracle_sigma(g);
  }
  log << "    all_pairs = Floyd-Warshall on " << agree << "/200, bipartition identity on " << identity << "/100\n";
  return agree == 200 && identity == 100;
}

bool determinism(std::ostream& log, const std::string& cli, const fs::path& work) {
  const std::vector<std::string> commands{
      "gen tilde-c2:k=4,p=2,q=3 -o {out}.hgr",
      "sigma {dir}/run0_t1_cmd0.hgr --per-vertex --average",
      "enumerate --k 3 --m 5 --json {out}.json --threads {t}",
      "enumerate --k 3 --m 4 --method bruteforce --json {out}.json --threads {t}",
      "verify --theorem min --k 4 --m 3 --json {out}.json --threads {t}",
      "verify --theorem max --k 3 --m 5 --json {out}.json --threads {t}",
      "verify --theorem graph-remark --m 6 --json {out}.json --threads {t}",
      "lemma --id 5 --trials 50 --seed 42 --json {out}.json --threads {t}",
      "lemma --id 6 --trials 50 --seed 42 --json {out}.json --threads {t}",
  };
  fs::create_directories(work);
  auto expand = [&](std::string s, const std::string& out, unsigned t) {
    for (auto [from, to] : std::vector<std::pair<std::string, std::string>>{
             {"{out}", out}, {"{t}", std::to_string(t)}, {"{dir}", work.string()}}) {
      for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from)) s.replace(pos, from.size(), to);
    }
    return s;
  };
  bool ok = true;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::vector<std::string> outputs;
    for (auto [run, threads] : std::vector<std::pair<int, unsigned>>{{0, 1}, {1, 1}, {2, 4}}) {
      auto stem = (work / ("run" + std::to_string(run) + "_t" + std::to_string(threads) + "_cmd" + std::to_string(c)))
                      .string();
      int rc = run_cli(cli, expand(commands[c], stem, threads), stem + ".stdout");
      std::string files = slurp(stem + ".stdout");
      for (const char* ext : {".hgr", ".json"})
        if (fs::exists(stem + ext)) files += "\n--file--\n" + slurp(stem + ext);
      if (rc != 0) {
        log << "    command " << c << " exited " << rc << "\n";
        ok = false;
      }
      outputs.push_back(files);
    }
    bool same = outputs[0] == outputs[1] && outputs[1] == outputs[2] && outputs[0].size() > 1;
    auto label = commands[c].substr(0, std::min(commands[c].find(" -o"), commands[c].find(" {dir}")));
    label = label.substr(0, label.find(" --json"));
    log << "    " << label << (same ? ": identical" : ": DIFFERS") << "\n";
    ok = ok && same;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " <hypertrans-cli> [work-dir]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "hypertrans_acceptance";
  fs::remove_all(work);

  std::vector<Criterion> criteria{
      {1, "minimum transmission at desk scale", 120,
       [&](std::ostream& log) { return theorem_min(log, cli, work / "verify"); }},
      {2, "maximum transmission at desk scale", 120,
       [&](std::ostream& log) { return theorem_max(log, cli, work / "verify"); }},
      {3, "tilde-C2 exchange delta, exhaustive", 60, tilde_c2_exchange},
      {4, "lemma suites 1-5, 100 trials, seed 42", 300,
       [&](std::ostream& log) { return seeded_lemma_checks(log, work / "witnesses"); }},
      {5, "constructive vs brute-force enumeration", 600, enumerators_agree},
      {6, "graph case: bound m(m-2) and diameter <= 2", 60, graph_remark},
      {7, "distances vs Floyd-Warshall, bipartition identity", 60, metric_oracle},
      {8, "byte-identical reruns across thread counts", 600,
       [&](std::ostream& log) { return determinism(log, cli, work / "determinism"); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.limit_seconds;
    bool pass = ok && in_time;
    failures += !pass;
    std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                seconds, c.limit_seconds);
    std::cout << log.str();
    if (!in_time) std::cout << "    over the time limit\n";
    std::cout.flush();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
