#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "json_io.hpp"

namespace ratpow::cli {
namespace {

constexpr const char* kLedgerHeader = "n,sigma,mode,seed,iters,best_rp,ratio,witness";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt15(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::size_t worker_count(std::size_t requested, std::size_t jobs) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(requested > 0 ? requested : hw, jobs));
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  std::vector<std::string> words;
  std::string file;
  bool oracle = false;
  bool timing = false;
  std::size_t threads = 0;
};

struct InputWord {
  std::string label;  // "argument 2" or "path:7"
  Word word;
};

Word parse_input(const std::string& text, const std::string& label, std::size_t column_offset) {
  if (text.empty()) throw UsageError(label + ": empty input");
  try {
    return Word::from_text(text);
  } catch (const ParseError& e) {
    throw UsageError(label + ":" + std::to_string(e.column() + column_offset) + ": " + e.what());
  }
}

std::vector<InputWord> gather_inputs(const AnalyzeOptions& o) {
  std::vector<InputWord> inputs;
  for (std::size_t i = 0; i < o.words.size(); ++i) {
    const std::string label = "argument " + std::to_string(i + 1);
    inputs.push_back({label, parse_input(o.words[i], label, 0)});
  }
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot open " + o.file);
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      const std::string label = o.file + ":" + std::to_string(lineno);
      inputs.push_back({label, parse_input(line.substr(first, last - first + 1), label, first)});
    }
  }
  if (inputs.empty()) throw UsageError("no input words");
  return inputs;
}

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  const auto inputs = gather_inputs(o);
  std::vector<std::string> lines(inputs.size()), summaries(inputs.size());
  std::vector<char> ok(inputs.size(), 0);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      const auto analysis = analyze_word(inputs[i].word);
      const auto report = check_word_bounds(analysis, inputs[i].label);
      OracleCheck oracle;
      bool oracle_skipped = false;
      if (o.oracle) {
        if (inputs[i].word.size() <= oracle::kOracleMaxLength) {
          oracle.ran = true;
          oracle.rp = oracle::rp_oracle(inputs[i].word);
          oracle.agrees = oracle.rp == analysis.breakdown.total;
        } else {
          oracle_skipped = true;
        }
      }
      json doc = analysis_document(analysis, report, oracle);
      if (oracle_skipped) doc["oracle"] = {{"skipped", "length exceeds oracle limit"}};
      const double elapsed = seconds_since(start);
      if (o.timing) doc["timing"] = {{"seconds", elapsed}};
      lines[i] = dump_line(std::move(doc));
      ok[i] = report.all_pass() && (!oracle.ran || oracle.agrees);

      std::ostringstream s;
      s << inputs[i].label << ": n=" << analysis.length() << " RP=" << analysis.breakdown.total
        << " classes=" << analysis.classes.size()
        << (report.all_pass() ? " checks pass" : " CHECK FAILED");
      for (const auto& c : report.checks) {
        if (!c.pass) s << " [" << c.id << " at " << c.where << "]";
      }
      if (oracle.ran) s << (oracle.agrees ? " oracle agrees" : " ORACLE DISAGREES");
      if (o.timing) s << " (" << fmt15(elapsed) << " s)";
      summaries[i] = s.str();
    }
  };
  const std::size_t workers = worker_count(o.threads, inputs.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  bool all_ok = true;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    out << lines[i] << '\n';
    err << summaries[i] << '\n';
    all_ok = all_ok && ok[i];
  }
  return all_ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.resolution < 50) throw UsageError("resolution must be at least 50");
  const auto report = verify_optimization_lemmas(o);
  out << dump_line(optimization_document(report)) << '\n';
  err << "one-eighth grid: " << report.one_eighth.points << " points, max "
      << fmt15(report.one_eighth.max_value) << ", " << report.one_eighth.maximizers
      << " maximizers, nearest to (1/4, 1/4, 0) at distance "
      << fmt15(report.one_eighth.nearest_distance) << '\n';
  err << "packing grid: " << report.packing.cells << " cells, " << report.packing.samples
      << " samples, worst excess " << fmt15(report.packing.worst_excess) << '\n';
  if (!report.all_pass()) {
    if (report.packing.violations > 0) {
      err << "violation: packing at (s, B) = (" << fmt15(report.packing.worst_s) << ", "
          << fmt15(report.packing.worst_b) << ")\n";
    }
    if (report.one_eighth.violations > 0) {
      const auto& p = report.one_eighth.argmax;
      err << "violation: one-eighth at (a, s, y) = (" << fmt15(p[0]) << ", " << fmt15(p[1])
          << ", " << fmt15(p[2]) << ")\n";
    }
    if (report.phi_steps.max_violation > kBoundTolerance) {
      err << "violation: phi step at (" << fmt15(report.phi_steps.at_ri) << ", "
          << fmt15(report.phi_steps.at_rj) << ")\n";
    }
    return kCheckFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// construct

int cmd_construct(const ConstructionSpec& spec, bool measure, std::ostream& out,
                  std::ostream& err) {
  const Word w = generate(spec);
  const json doc = construction_document(spec, w, measure);
  out << w.text() << '\n' << dump_line(doc) << '\n';
  err << doc["family"].get<std::string>() << ": length " << w.size();
  if (!doc["expected_rp"].is_null()) err << ", expected RP " << doc["expected_rp"];
  if (doc["hypothesis"].get<bool>()) {
    err << ", draft hypothesis RP " << doc["hypothesis_detail"]["predicted_rp"];
    if (doc["hypothesis_detail"].contains("status")) {
      err << " (" << doc["hypothesis_detail"]["status"].get<std::string>() << ")";
    }
  }
  if (measure) err << ", measured RP " << doc["measured_rp"];
  err << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchOptions {
  std::size_t n = 0;
  std::size_t sigma = 2;
  std::uint64_t budget = kDefaultExhaustiveBudget;
  std::size_t threads = 0;
  std::uint64_t seed = 0;
  std::uint64_t iters = 10000;
  std::string init = "random";
  std::string ledger;
  std::string log;
  bool timing = false;
};

std::string ledger_row(const SearchResult& r) {
  std::ostringstream s;
  s << r.n << ',' << r.sigma << ',' << to_string(r.mode) << ',' << r.seed << ',' << r.iterations
    << ',' << r.best_rp << ',' << fmt15(r.ratio()) << ',' << r.witness.text();
  return s.str();
}

void append_ledger(const std::string& path, const SearchResult& r) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
  std::ofstream f(path, std::ios::app);
  if (!f) throw UsageError("cannot write ledger " + path);
  if (fresh) f << kLedgerHeader << '\n';
  f << ledger_row(r) << '\n';
}

int finish_search(const SearchResult& r, const SearchOptions& o, std::ostream& out,
                  std::ostream& err) {
  json doc = search_document(r);
  if (o.timing) doc["wall_seconds"] = r.wall_seconds;
  out << dump_line(doc) << '\n';
  if (!o.ledger.empty()) append_ledger(o.ledger, r);
  if (!o.log.empty()) {
    json log = search_document(r);
    log["wall_seconds"] = r.wall_seconds;
    if (r.mode == SearchMode::heuristic) {
      log["init"] = o.init;
      log["reference_coefficient"] = 0.115;
      log["gap_to_reference"] = r.ratio() - 0.115;
      log["ninth_floor_met"] = r.ratio() >= 1.0 / 9.0;
    }
    std::ofstream f(o.log);
    if (!f) throw UsageError("cannot write log " + o.log);
    f << dump_line(log) << '\n';
  }
  err << to_string(r.mode) << " n=" << r.n << " sigma=" << r.sigma << " best_rp=" << r.best_rp
      << " ratio=" << fmt15(r.ratio()) << " witness=" << r.witness.text() << '\n';
  return kOk;
}

int cmd_search_exhaustive(const SearchOptions& o, std::ostream& out, std::ostream& err) {
  return finish_search(exhaustive_max_rp(o.n, o.sigma, o.budget, o.threads), o, out, err);
}

int cmd_search_heuristic(const SearchOptions& o, std::ostream& out, std::ostream& err) {
  HeuristicOptions h;
  h.n = o.n;
  h.sigma = o.sigma;
  h.seed = o.seed;
  h.iters = o.iters;
  h.init = parse_seed_init(o.init);
  return finish_search(heuristic_max_rp(h), o, out, err);
}

// ---------------------------------------------------------------------------
// table

struct TableOptions {
  std::vector<std::string> ledgers;
  std::size_t exhaustive = 0;
  std::size_t sigma = 2;
  std::size_t threads = 0;
  std::string format = "csv";
};

std::vector<SearchResult> read_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<SearchResult> rows;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kLedgerHeader || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream s(line);
    for (std::string cell; std::getline(s, cell, ',');) cells.push_back(cell);
    if (cells.size() != 8) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 8 columns");
    }
    try {
      SearchResult r;
      r.n = std::stoull(cells[0]);
      r.sigma = std::stoull(cells[1]);
      if (cells[2] == "exhaustive") {
        r.mode = SearchMode::exhaustive;
      } else if (cells[2] == "heuristic") {
        r.mode = SearchMode::heuristic;
      } else {
        throw UsageError("unknown mode '" + cells[2] + "'");
      }
      r.seed = std::stoull(cells[3]);
      r.iterations = std::stoull(cells[4]);
      r.best_rp = std::stoull(cells[5]);
      r.witness = Word::from_text(cells[7]);
      rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<SearchResult> results;
  for (const auto& path : o.ledgers) {
    auto rows = read_ledger(path);
    results.insert(results.end(), rows.begin(), rows.end());
  }
  for (std::size_t n = 1; n <= o.exhaustive; ++n) {
    results.push_back(exhaustive_max_rp(n, o.sigma, kDefaultExhaustiveBudget, o.threads));
  }
  if (results.empty()) throw UsageError("table needs --ledger or --exhaustive");

  const auto rows = coefficient_report(results);
  bool ok = true;
  std::size_t prev_n = 0, prev_rp = 0;
  for (const auto& row : rows) {
    if (row.mode != SearchMode::exhaustive) continue;
    const double n = static_cast<double>(row.n);
    if (static_cast<double>(row.best_rp) > n * n / 8.0 + n / 2.0) {
      err << "row n=" << row.n << " exceeds n^2/8 + n/2\n";
      ok = false;
    }
    if (prev_n > 0 && row.n > prev_n && row.best_rp < prev_rp) {
      err << "row n=" << row.n << " breaks monotonicity\n";
      ok = false;
    }
    prev_n = row.n;
    prev_rp = row.best_rp;
  }

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n}, {"best_rp", r.best_rp}, {"ratio", r.ratio},
                     {"mode", to_string(r.mode)}, {"n2_over_8", r.eighth_envelope},
                     {"n2_over_9", r.ninth_envelope}});
    }
    out << dump_line(arr) << '\n';
  } else {
    out << "n,best_rp,ratio,mode,n2_over_8,n2_over_9\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.best_rp << ',' << fmt15(r.ratio) << ',' << to_string(r.mode) << ','
          << fmt15(r.eighth_envelope) << ',' << fmt15(r.ninth_envelope) << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinct rational powers in words: analysis, bounds, constructions, search"};
  app.name("ratpow");
  app.require_subcommand(1);
  app.set_version_flag("--version", RATPOW_VERSION);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze words and check every bound");
  analyze_cmd->add_option("words", analyze.words, "Words over a-z");
  analyze_cmd->add_option("--file", analyze.file, "One word per line, # comments ignored");
  analyze_cmd->add_flag("--oracle", analyze.oracle, "Cross-check against brute force (n <= 400)");
  analyze_cmd->add_flag("--timing", analyze.timing, "Include wall time in the output");
  analyze_cmd->add_option("--threads", analyze.threads, "Worker threads (0: all cores)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Grid checks of the continuous inequalities");
  verify_cmd->add_option("--resolution", verify.resolution, "One-eighth grid steps per 1/2")
      ->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials, "Random families per packing cell")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--packing-grid", verify.packing_grid, "Packing cells per axis")
      ->capture_default_str();
  verify_cmd->add_option("--max-parts", verify.max_parts)->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0: all cores)");

  ConstructionSpec spec;
  bool measure = false;
  auto* construct_cmd = app.add_subcommand("construct", "Generate a lower-bound construction");
  construct_cmd->require_subcommand(1);
  auto* wn_cmd = construct_cmd->add_subcommand("wn", "(a^n b a^(n-1) b)^4 a^(n-1)");
  wn_cmd->add_option("--n", spec.n)->required();
  wn_cmd->add_flag("--measure", measure, "Also compute RP");
  auto* fib_cmd = construct_cmd->add_subcommand("fib", "Fibonacci-morphic draft family");
  fib_cmd->add_option("--t", spec.t)->required();
  fib_cmd->add_option("--d", spec.d)->capture_default_str();
  fib_cmd->add_option("--prefix", spec.prefix_len)->capture_default_str();
  fib_cmd->add_flag("--measure", measure, "Also compute RP and audit the draft formulas");

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "Maximize RP over words of length n");
  search_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", search.n)->required();
    cmd->add_option("--sigma", search.sigma)->capture_default_str();
    cmd->add_option("--ledger", search.ledger, "Append a CSV row");
    cmd->add_option("--log", search.log, "Write a JSON run log");
    cmd->add_flag("--timing", search.timing, "Include wall time in the output");
  };
  auto* exhaustive_cmd = search_cmd->add_subcommand("exhaustive", "Exact RP(n)");
  add_common(exhaustive_cmd);
  exhaustive_cmd->add_option("--budget", search.budget, "Maximum sigma^n")->capture_default_str();
  exhaustive_cmd->add_option("--threads", search.threads, "Worker threads (0: all cores)");
  auto* heuristic_cmd = search_cmd->add_subcommand("heuristic", "Seeded hill climbing");
  add_common(heuristic_cmd);
  heuristic_cmd->add_option("--seed", search.seed)->capture_default_str();
  heuristic_cmd->add_option("--iters", search.iters)->capture_default_str();
  heuristic_cmd->add_option("--init", search.init, "random, wn_seed or fib_seed")
      ->capture_default_str();

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Coefficient report from ledgers or a fresh run");
  table_cmd->add_option("--ledger", table.ledgers, "CSV ledger(s) written by search");
  table_cmd->add_option("--exhaustive", table.exhaustive, "Compute exact RP(n) for n = 1..MAXN");
  table_cmd->add_option("--sigma", table.sigma)->capture_default_str();
  table_cmd->add_option("--threads", table.threads);
  table_cmd->add_option("--format", table.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::string dot_word;
  std::size_t dot_order = 1;
  auto* dot_cmd = app.add_subcommand("dot", "Rauzy graph of a word in Graphviz format");
  dot_cmd->add_option("word", dot_word)->required();
  dot_cmd->add_option("--order", dot_order)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*construct_cmd) {
      spec.family = *wn_cmd ? Family::wn : Family::fib_morphic;
      return cmd_construct(spec, measure, out, err);
    }
    if (*exhaustive_cmd) return cmd_search_exhaustive(search, out, err);
    if (*heuristic_cmd) return cmd_search_heuristic(search, out, err);
    if (*table_cmd) return cmd_table(table, out, err);
    if (*dot_cmd) {
      const Word w = parse_input(dot_word, "argument 1", 0);
      out << rauzy_graph(w, dot_order).to_dot();
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ratpow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ratpow::cli
