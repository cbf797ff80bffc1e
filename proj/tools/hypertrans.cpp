// hypertrans: transmission of uniform hypergraphs from the command line.
//
//   hypertrans gen <family-spec> [-o FILE]
//   hypertrans sigma FILE [--per-vertex] [--average]
//   hypertrans enumerate --k K --m M [--method constructive|bruteforce] [--json FILE]
//   hypertrans verify --theorem min|max|graph-remark --k K --m M [--json FILE] [--witness-dir DIR]
//   hypertrans lemma --id ID --trials N --seed S [--json FILE] [--witness-dir DIR]
//
// Exit codes: 0 success, 1 verified counterexample, 2 bad arguments or input,
// 3 write failure, 4 disconnected input, 5 over budget.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <system_error>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include "hypertrans/enumerate.hpp"
#include "hypertrans/error.hpp"
#include "hypertrans/extremal.hpp"
#include "hypertrans/families.hpp"
#include "hypertrans/hgr.hpp"
#include "hypertrans/report_json.hpp"

namespace fs = std::filesystem;
using namespace hypertrans;

namespace {

enum Exit : int {
  kOk = 0,
  kCounterexample = 1,
  kBadInput = 2,
  kWriteFailure = 3,
  kDisconnected = 4,
  kOverBudget = 5,
};

struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const fs::path& path, const std::string& content) {
  try {
    write_file_atomic(path, content);
  } catch (const std::exception& e) {
    throw WriteError(e.what());
  }
}

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("HYPERTRANS_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0') {
    throw Error(Errc::BadParam, std::string("HYPERTRANS_BUDGET is not an integer: ") + raw);
  }
  return value;
}

std::string sigma_list(const EnumerationResult& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r.classes[i].sigma);
  }
  return out + "]";
}

std::vector<std::string> dump_witnesses(const fs::path& dir, const std::string& stem,
                                        const std::vector<Hypergraph>& graphs) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto path = dir / (stem + "_" + std::to_string(i) + ".hgr");
    write_output(path, write_hgr(graphs[i]));
    paths.push_back(path.string());
  }
  return paths;
}

void emit_json(const std::string& path, const nlohmann::json& doc) {
  if (!path.empty()) write_output(path, doc.dump(2) + "\n");
}

struct GenArgs {
  std::string spec;
  std::string out;
};

int run_gen(const GenArgs& args) {
  auto g = FamilySpec::parse(args.spec).construct();
  if (!args.out.empty()) write_output(args.out, write_hgr(g));
  std::cout << "n=" << g.n() << " m=" << g.m() << " sigma=" << transmission(g) << "\n";
  return kOk;
}

struct SigmaArgs {
  std::string in;
  bool per_vertex = false;
  bool average = false;
};

int run_sigma(const SigmaArgs& args) {
  auto g = read_hgr_file(args.in);
  auto d = all_pairs(g);
  std::cout << transmission(d) << "\n";
  if (args.per_vertex) {
    for (Vertex u = 0; u < g.n(); ++u) {
      Sigma row = 0;
      for (int x : d.row(u)) row += x;
      std::cout << u << " " << row << "\n";
    }
  }
  if (args.average) {
    auto avg = average_distance(g);
    std::cout << avg.numerator() << "/" << avg.denominator() << "\n";
  }
  return kOk;
}

struct EnumerateArgs {
  int k = 3;
  int m = 3;
  std::string method = "constructive";
  std::string json;
  unsigned threads = 1;
};

int run_enumerate(const EnumerateArgs& args) {
  EnumerateOptions options{budget_from_env(), args.threads};
  auto result = args.method == "bruteforce" ? enumerate_unicyclic_bruteforce(args.k, args.m, options)
                                            : enumerate_unicyclic(args.k, args.m, options);
  emit_json(args.json, to_json(result));
  std::cout << "classes " << result.classes.size() << "\n";
  std::cout << "sigma " << sigma_list(result) << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string theorem;
  int k = 3;
  int m = 3;
  std::string json;
  std::string witness_dir = ".";
  unsigned threads = 1;
};

int run_verify(const VerifyArgs& args) {
  EnumerateOptions options{budget_from_env(), args.threads};
  nlohmann::json doc;
  bool pass = false;
  std::vector<Hypergraph> witnesses;
  std::string summary;
  if (args.theorem == "graph-remark") {
    if (args.k != 2) throw Error(Errc::BadParam, "graph-remark concerns graphs, use --k 2");
    auto report = graph_remark_check(args.m, options);
    doc = to_json(report);
    pass = report.pass;
    for (const auto& c : report.minimizers) witnesses.push_back(c.graph);
    summary = "graph-remark m=" + std::to_string(args.m) + ": min " + std::to_string(report.min_value) +
              " (bound " + std::to_string(report.bound) + "), max " + std::to_string(report.max_value);
    for (const auto& note : report.notes) summary += "\n  note: " + note;
  } else {
    auto report = args.theorem == "min" ? verify_theorem_min(args.k, args.m, options)
                                        : verify_theorem_max(args.k, args.m, options);
    doc = to_json(report);
    pass = report.pass;
    witnesses = report.extremal_graphs;
    summary = "theorem " + args.theorem + " k=" + std::to_string(args.k) + " m=" + std::to_string(args.m) +
              ": value " + std::to_string(report.enumerated_value) + ", predicted " +
              report.predicted_family + " (" + std::to_string(report.predicted_value) + ")" +
              (report.unique ? ", unique" : ", not unique");
  }
  if (!pass) {
    auto stem = "witness_" + args.theorem + "_k" + std::to_string(args.k) + "_m" + std::to_string(args.m);
    doc["witness"] = dump_witnesses(args.witness_dir, stem, witnesses);
  }
  emit_json(args.json, doc);
  std::cout << summary << "\n" << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kCounterexample;
}

struct LemmaArgs {
  int id = 1;
  int trials = 100;
  std::uint64_t seed = 42;
  std::string json;
  std::string witness_dir = ".";
  unsigned threads = 1;
};

int run_lemma(const LemmaArgs& args) {
  auto report = check_lemma(args.id, args.trials, args.seed, args.threads);
  auto doc = to_json(report);
  if (!report.pass()) {
    std::vector<std::string> paths;
    for (const auto& t : report.entries) {
      if (t.satisfied) continue;
      auto stem = "witness_lemma" + std::to_string(args.id) + "_seed" + std::to_string(args.seed) +
                  "_trial" + std::to_string(t.index);
      for (auto& p : dump_witnesses(args.witness_dir, stem, {t.instance, t.transformed})) {
        paths.push_back(std::move(p));
      }
    }
    doc["witness"] = paths;
  }
  emit_json(args.json, doc);
  std::cout << "lemma " << args.id << ": " << report.passed() << "/" << report.trials
            << " trials satisfied\n"
            << (report.pass() ? "PASS" : "FAIL") << "\n";
  return report.pass() ? kOk : kCounterexample;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Disconnected: return kDisconnected;
    case Errc::TooLarge: return kOverBudget;
    default: return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transmission (Wiener index) of uniform hypergraphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build a named family and print n, m, sigma");
  gen_cmd->add_option("spec", gen.spec, "Family spec, e.g. tilde-c2:k=3,p=1,q=1")->required();
  gen_cmd->add_option("-o,--out", gen.out, "Write the instance in hgr format");

  SigmaArgs sigma;
  auto* sigma_cmd = app.add_subcommand("sigma", "Transmission of an hgr file");
  sigma_cmd->add_option("file", sigma.in, "Input hgr file")->required();
  sigma_cmd->add_flag("--per-vertex", sigma.per_vertex, "Also print each vertex's distance sum");
  sigma_cmd->add_flag("--average", sigma.average, "Also print the exact average distance p/q");

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "Unicyclic hypergraphs up to isomorphism");
  en_cmd->add_option("--k", en.k, "Uniformity")->required();
  en_cmd->add_option("--m", en.m, "Number of edges")->required();
  en_cmd->add_option("--method", en.method, "constructive or bruteforce")
      ->check(CLI::IsMember({"constructive", "bruteforce"}));
  en_cmd->add_option("--json", en.json, "Write the EnumerationResult JSON here");
  en_cmd->add_option("--threads", en.threads, "Worker threads")->check(CLI::PositiveNumber);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check an extremal theorem by enumeration");
  ver_cmd->add_option("--theorem", ver.theorem, "min, max or graph-remark")
      ->required()
      ->check(CLI::IsMember({"min", "max", "graph-remark"}));
  ver_cmd->add_option("--k", ver.k, "Uniformity (2 for graph-remark)");
  ver_cmd->add_option("--m", ver.m, "Number of edges")->required();
  ver_cmd->add_option("--json", ver.json, "Write the report JSON here");
  ver_cmd->add_option("--witness-dir", ver.witness_dir, "Directory for counterexample files");
  ver_cmd->add_option("--threads", ver.threads, "Worker threads")->check(CLI::PositiveNumber);

  LemmaArgs lem;
  auto* lem_cmd = app.add_subcommand("lemma", "Seeded property check of a lemma");
  lem_cmd->add_option("--id", lem.id, "Lemma id 1..6")->required();
  lem_cmd->add_option("--trials", lem.trials, "Number of random instances");
  lem_cmd->add_option("--seed", lem.seed, "Random seed");
  lem_cmd->add_option("--json", lem.json, "Write the LemmaReport JSON here");
  lem_cmd->add_option("--witness-dir", lem.witness_dir, "Directory for counterexample files");
  lem_cmd->add_option("--threads", lem.threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*sigma_cmd) return run_sigma(sigma);
    if (*en_cmd) return run_enumerate(en);
    if (*ver_cmd) {
      if (ver.theorem == "graph-remark" && ver_cmd->count("--k") == 0) ver.k = 2;
      return run_verify(ver);
    }
    if (*lem_cmd) return run_lemma(lem);
  } catch (const WriteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kWriteFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kBadInput;
}
