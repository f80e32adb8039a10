#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "condense/error.hpp"
#include "condense/matrix.hpp"
#include "condense/metrics.hpp"
#include "condense/pipeline.hpp"
#include "condense/preproc.hpp"
#include "condense/report.hpp"
#include "condense/resources.hpp"

namespace condense::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lang;
  std::string stopwords;
  std::string lemma_rules;
  std::string lemma_exceptions;
  std::string report;
  bool verbose = false;
  bool timing = false;
  double ratio = 0.25;
  double eta = 0.5;
  std::string metric_order;
  std::uint64_t seed = 1;
  int trials = 20;
  std::vector<std::string> inputs;
};

void AddResourceFlags(CLI::App& cmd, Options& o) {
  cmd.add_option("--lang", o.lang, "Text language (fr | es)")
      ->required()
      ->check(CLI::IsMember({"fr", "es"}));
  cmd.add_option("--stopwords", o.stopwords, "Stopword file (one form per line)");
  cmd.add_option("--lemma-rules", o.lemma_rules, "Suffix rules (suffix<TAB>replacement)");
  cmd.add_option("--lemma-exceptions", o.lemma_exceptions,
                 "Exception table (surface<TAB>term)");
}

void AddDecisionFlags(CLI::App& cmd, Options& o) {
  cmd.add_option("--ratio", o.ratio, "Fraction of segments to keep")
      ->capture_default_str();
  cmd.add_option("--eta", o.eta, "Vote gain in (0, 1]")->capture_default_str();
  cmd.add_option("--metric-order", o.metric_order,
                 "Comma-separated metric presentation order");
}

PreprocConfig MakePreprocConfig(const Options& o) {
  const Language language = *ParseLanguage(o.lang);
  PreprocConfig config = PreprocConfig::Defaults(language);
  if (!o.stopwords.empty()) config.stopwords = ParseStopwords(ReadFile(o.stopwords));
  if (!o.lemma_rules.empty() || !o.lemma_exceptions.empty()) {
    auto rules = o.lemma_rules.empty()
                     ? config.lemmas.rules()
                     : ParseLemmaRules(ReadFile(o.lemma_rules));
    auto exceptions =
        o.lemma_exceptions.empty()
            ? ParseLemmaExceptions(EmbeddedResource(language, ResourceKind::kLemmaExceptions))
            : ParseLemmaExceptions(ReadFile(o.lemma_exceptions));
    config.lemmas = LemmaTable(std::move(rules), std::move(exceptions));
  }
  return config;
}

DecisionConfig MakeDecisionConfig(const Options& o) {
  DecisionConfig config;
  config.ratio = o.ratio;
  config.gain = o.eta;
  if (!o.metric_order.empty()) {
    std::vector<MetricId> order;
    std::stringstream in(o.metric_order);
    for (std::string name; std::getline(in, name, ',');) {
      const auto id = ParseMetricId(name);
      if (!id) throw UsageError("unknown metric '" + name + "' in --metric-order");
      order.push_back(*id);
    }
    if (order.size() != kMetricCount) {
      throw UsageError("--metric-order must list all nine metrics");
    }
    std::copy(order.begin(), order.end(), config.metric_order.begin());
  }
  try {
    config.Validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return config;
}

RunSettings MakeSettings(const Options& o, const DecisionConfig& d) {
  RunSettings s;
  s.language = o.lang;
  s.ratio = d.ratio;
  s.gain = d.gain;
  for (MetricId id : d.metric_order) s.metric_order.emplace_back(ToString(id));
  if (!o.stopwords.empty()) s.stopwords = o.stopwords;
  if (!o.lemma_rules.empty()) s.lemma_rules = o.lemma_rules;
  if (!o.lemma_exceptions.empty()) s.lemma_exceptions = o.lemma_exceptions;
  s.verbose = o.verbose;
  return s;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    throw std::filesystem::filesystem_error(
        "cannot write file", path, std::make_error_code(std::errc::io_error));
  }
}

int Summarize(const Options& o, std::ostream& out) {
  const PreprocConfig preproc = MakePreprocConfig(o);
  const DecisionConfig decision = MakeDecisionConfig(o);
  const std::string text = ReadFile(o.inputs.front());

  const auto start = std::chrono::steady_clock::now();
  const Analysis analysis = condense::Summarize(text, preproc, decision);
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;

  for (std::size_t index : analysis.summary.selected) {
    out << analysis.document.segments[index].raw_text << '\n';
  }
  if (!o.report.empty()) {
    RunReport report = MakeRunReport(o.inputs.front(), MakeSettings(o, decision), analysis);
    if (o.timing) report.timing_ms = elapsed.count();
    WriteFile(o.report, ToJson(report));
  }
  return kOk;
}

int Stats(const Options& o, std::ostream& out) {
  const PreprocConfig preproc = MakePreprocConfig(o);
  std::vector<std::future<ReductionStats>> jobs;
  for (const std::string& path : o.inputs) {
    jobs.push_back(std::async(std::launch::async, [&preproc, path] {
      const Document doc = Preprocess(ReadFile(path), preproc);
      const Lexicon lexicon = BuildLexicon(doc);
      return ComputeReductionStats(doc, BuildMatrices(doc, lexicon));
    }));
  }
  // Collected in input order; the first failing input decides the status.
  std::vector<ReductionStats> stats;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    try {
      stats.push_back(jobs[k].get());
    } catch (const Error& e) {
      for (std::size_t rest = k + 1; rest < jobs.size(); ++rest) jobs[rest].wait();
      throw Error(e.code(), o.inputs[k] + ": " + e.what());
    } catch (...) {
      for (std::size_t rest = k + 1; rest < jobs.size(); ++rest) jobs[rest].wait();
      throw;
    }
  }
  const CorpusEstimates corpus = EstimateCorpus(stats);

  out << std::left << std::setw(28) << "input" << std::right;
  for (const char* h : {"N_M", "N_f", "N_L", "T", "P"}) out << std::setw(8) << h;
  for (const char* h : {"rho_f", "rho_L", "rho_gamma", "alpha"}) out << std::setw(11) << h;
  out << '\n' << std::fixed << std::setprecision(4);
  for (std::size_t k = 0; k < stats.size(); ++k) {
    const ReductionStats& s = stats[k];
    out << std::left << std::setw(28) << std::filesystem::path(o.inputs[k]).filename().string()
        << std::right << std::setw(8) << s.n_m << std::setw(8) << s.n_f << std::setw(8)
        << s.n_l << std::setw(8) << s.t << std::setw(8) << s.segments << std::setw(11)
        << s.rho_f << std::setw(11) << s.rho_l << std::setw(11) << s.rho_gamma
        << std::setw(11) << s.alpha << '\n';
  }
  out << "corpus (" << corpus.texts << " texts): rho_f=" << corpus.rho_f
      << " rho_L=" << corpus.rho_l << " rho_gamma=" << corpus.rho_gamma << '\n';
  out << "per-text mean +- sd: rho_f=" << corpus.per_text_rho_f.mean << " +- "
      << corpus.per_text_rho_f.stddev << " rho_L=" << corpus.per_text_rho_l.mean
      << " +- " << corpus.per_text_rho_l.stddev
      << " rho_gamma=" << corpus.per_text_rho_gamma.mean << " +- "
      << corpus.per_text_rho_gamma.stddev << '\n';

  if (!o.report.empty()) WriteFile(o.report, StatsReportJson(o.inputs, stats, corpus));
  return kOk;
}

int Discriminance(const Options& o, std::ostream& out) {
  const PreprocConfig preproc = MakePreprocConfig(o);
  const DecisionConfig decision = MakeDecisionConfig(o);
  const Document doc = Preprocess(ReadFile(o.inputs.front()), preproc);
  const Lexicon lexicon = BuildLexicon(doc);
  const MetricsTable table = ComputeMetricsTable(BuildMatrices(doc, lexicon));
  const std::vector<condense::Discriminance> ranking = RankDiscriminance(table.normalized);

  out << "rank  metric   stddev\n" << std::fixed << std::setprecision(6);
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    out << std::setw(4) << k + 1 << "  " << std::left << std::setw(8)
        << ToString(ranking[k].metric) << std::right << " " << ranking[k].stddev << '\n';
  }
  out << "decision presentation order:";
  for (std::size_t k = 0; k < decision.metric_order.size(); ++k) {
    out << (k ? "," : " ") << ToString(decision.metric_order[k]);
  }
  out << '\n';
  if (!o.report.empty()) {
    WriteFile(o.report,
              DiscriminanceReportJson(o.inputs.front(), ranking, decision.metric_order));
  }
  return kOk;
}

std::multiset<std::string> SelectedTexts(const Analysis& a) {
  std::multiset<std::string> texts;
  for (std::size_t index : a.summary.selected) {
    texts.insert(a.document.segments[index].raw_text);
  }
  return texts;
}

int ShuffleCheck(const Options& o, std::ostream& out) {
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  const PreprocConfig preproc = MakePreprocConfig(o);
  const DecisionConfig decision = MakeDecisionConfig(o);
  const Analysis baseline =
      condense::Summarize(ReadFile(o.inputs.front()), preproc, decision);
  const std::multiset<std::string> expected = SelectedTexts(baseline);

  std::vector<std::string> raw;
  for (const Segment& s : baseline.document.segments) raw.push_back(s.raw_text);

  std::mt19937_64 rng(o.seed);
  int failures = 0;
  for (int trial = 1; trial <= o.trials; ++trial) {
    const std::vector<std::size_t> perm = SeededPermutation(raw.size(), rng);
    std::vector<std::string> shuffled;
    for (std::size_t k : perm) shuffled.push_back(raw[k]);
    const Analysis rerun = Analyze(PreprocessSegments(shuffled, preproc), decision);
    if (SelectedTexts(rerun) == expected) continue;
    ++failures;
    out << "trial " << trial << ": selection changed under permutation [";
    for (std::size_t k = 0; k < perm.size(); ++k) out << (k ? "," : "") << perm[k];
    out << "]\n";
  }
  if (failures == 0) {
    out << "PASS: " << o.trials << " permutations, " << expected.size() << " of "
        << raw.size() << " segments selected identically\n";
    return kOk;
  }
  out << "FAIL: " << failures << " of " << o.trials << " permutations changed the selection\n";
  return kShuffleMismatch;
}

}  // namespace

std::vector<std::size_t> SeededPermutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  for (std::size_t k = n; k > 1; --k) {
    // Unbiased draw in [0, k) by rejection.
    const std::uint64_t bound = k;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t draw;
    do {
      draw = rng();
    } while (draw >= limit);
    std::swap(perm[k - 1], perm[draw % bound]);
  }
  return perm;
}

int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extractive condensation of French and Spanish plain text", "condense"};
  app.require_subcommand(1);
  Options o;

  CLI::App* summarize = app.add_subcommand("summarize", "Print the condensate of a text");
  AddResourceFlags(*summarize, o);
  AddDecisionFlags(*summarize, o);
  summarize->add_option("--report", o.report, "Write a JSON run report");
  summarize->add_flag("--verbose", o.verbose, "Include the term-segment matrices in the report");
  summarize->add_flag("--timing", o.timing, "Record wall-clock time in the report");
  summarize->add_option("input", o.inputs, "UTF-8 text file")->required()->expected(1);

  CLI::App* stats = app.add_subcommand("stats", "Lexicon reduction statistics over a corpus");
  AddResourceFlags(*stats, o);
  stats->add_option("--report", o.report, "Write a JSON statistics report");
  stats->add_option("inputs", o.inputs, "UTF-8 text files")->required();

  CLI::App* discriminance =
      app.add_subcommand("discriminance", "Rank metrics by their spread across segments");
  AddResourceFlags(*discriminance, o);
  discriminance->add_option("--metric-order", o.metric_order,
                            "Comma-separated metric presentation order");
  discriminance->add_option("--report", o.report, "Write a JSON discriminance report");
  discriminance->add_option("input", o.inputs, "UTF-8 text file")->required()->expected(1);

  CLI::App* shuffle = app.add_subcommand(
      "shuffle-check", "Verify the selection does not depend on segment order");
  AddResourceFlags(*shuffle, o);
  AddDecisionFlags(*shuffle, o);
  shuffle->add_option("--seed", o.seed, "Permutation seed")->capture_default_str();
  shuffle->add_option("--trials", o.trials, "Number of permutations")->capture_default_str();
  shuffle->add_option("input", o.inputs, "UTF-8 text file")->required()->expected(1);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (summarize->parsed()) return Summarize(o, out);
    if (stats->parsed()) return Stats(o, out);
    if (discriminance->parsed()) return Discriminance(o, out);
    if (shuffle->parsed()) return ShuffleCheck(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.code().message() << ": " << e.path1().string() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.IsDegenerateText()) return kDegenerateText;
    if (e.code() == ErrorCode::kResourceFormat) return kIo;
    return kUsage;
  }
  return kUsage;
}

}  // namespace condense::cli
