#include "condense/report.hpp"

#include <json.hpp>

#include "condense/error.hpp"

namespace condense {

using Json = nlohmann::ordered_json;

RunReport MakeRunReport(std::string input, RunSettings settings,
                        const Analysis& analysis) {
  RunReport report;
  report.input = std::move(input);
  report.settings = std::move(settings);
  report.stats = analysis.summary.stats;
  report.selected = analysis.summary.selected;
  report.condensate = analysis.summary.text;

  const std::size_t p = analysis.document.size();
  report.segments.resize(p);
  for (std::size_t mu = 0; mu < p; ++mu) {
    SegmentRecord& record = report.segments[mu];
    record.index = mu;
    record.text = analysis.document.segments[mu].raw_text;
    for (std::size_t k = 0; k < kMetricCount; ++k) {
      record.raw[k] = analysis.metrics.raw[k][mu];
      record.normalized[k] = analysis.metrics.normalized[k][mu];
    }
    record.votes = analysis.summary.scores[mu].votes;
    record.p1 = analysis.summary.scores[mu].p1;
  }
  for (std::size_t index : report.selected) report.segments[index].selected = true;

  if (report.settings.verbose) {
    MatrixDump dump;
    dump.lexicon = analysis.lexicon.terms();
    const auto& m = analysis.matrices;
    for (std::size_t mu = 0; mu < m.segments(); ++mu) {
      const auto f = m.frequency.row(mu);
      const auto x = m.presence.row(mu);
      dump.frequency.emplace_back(f.begin(), f.end());
      dump.presence.emplace_back(x.begin(), x.end());
    }
    report.matrices = std::move(dump);
  }
  return report;
}

namespace {

Json MetricObject(const std::array<double, kMetricCount>& values) {
  Json out = Json::object();
  for (MetricId id : kCanonicalOrder) out[std::string(ToString(id))] = values[Index(id)];
  return out;
}

Json StatsToJson(const ReductionStats& s) {
  return Json{{"n_m", s.n_m},           {"n_f", s.n_f},
              {"n_l", s.n_l},           {"t", s.t},
              {"segments", s.segments}, {"rho_f", s.rho_f},
              {"rho_l", s.rho_l},       {"rho_gamma", s.rho_gamma},
              {"alpha", s.alpha}};
}

template <typename T>
T Get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kReportFormat, std::string("report: missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kReportFormat,
                std::string("report: field '") + key + "': " + e.what());
  }
}

std::array<double, kMetricCount> MetricArray(const Json& j, const char* key) {
  const Json& obj = Get<Json>(j, key);
  std::array<double, kMetricCount> out{};
  for (MetricId id : kCanonicalOrder) {
    out[Index(id)] = Get<double>(obj, std::string(ToString(id)).c_str());
  }
  return out;
}

ReductionStats StatsFromJson(const Json& j) {
  ReductionStats s;
  s.n_m = Get<std::size_t>(j, "n_m");
  s.n_f = Get<std::size_t>(j, "n_f");
  s.n_l = Get<std::size_t>(j, "n_l");
  s.t = Get<std::size_t>(j, "t");
  s.segments = Get<std::size_t>(j, "segments");
  s.rho_f = Get<double>(j, "rho_f");
  s.rho_l = Get<double>(j, "rho_l");
  s.rho_gamma = Get<double>(j, "rho_gamma");
  s.alpha = Get<double>(j, "alpha");
  return s;
}

}  // namespace

std::string ToJson(const RunReport& report) {
  Json j;
  j["schema_version"] = report.schema_version;
  j["input"] = report.input;
  const RunSettings& c = report.settings;
  j["config"] = Json{{"language", c.language},
                     {"ratio", c.ratio},
                     {"eta", c.gain},
                     {"metric_order", c.metric_order},
                     {"stopwords", c.stopwords},
                     {"lemma_rules", c.lemma_rules},
                     {"lemma_exceptions", c.lemma_exceptions},
                     {"verbose", c.verbose}};
  j["stats"] = StatsToJson(report.stats);
  Json segments = Json::array();
  for (const SegmentRecord& s : report.segments) {
    segments.push_back(Json{{"index", s.index},
                            {"text", s.text},
                            {"raw", MetricObject(s.raw)},
                            {"normalized", MetricObject(s.normalized)},
                            {"votes", s.votes},
                            {"p1", s.p1},
                            {"p0", 1.0 - s.p1},
                            {"selected", s.selected}});
  }
  j["segments"] = std::move(segments);
  j["selected"] = report.selected;
  j["condensate"] = report.condensate;
  if (report.timing_ms) j["timing_ms"] = *report.timing_ms;
  if (report.matrices) {
    j["matrices"] = Json{{"lexicon", report.matrices->lexicon},
                         {"frequency", report.matrices->frequency},
                         {"presence", report.matrices->presence}};
  }
  return j.dump(2) + "\n";
}

RunReport ParseRunReport(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kReportFormat, std::string("report: ") + e.what());
  }
  RunReport r;
  r.schema_version = Get<int>(j, "schema_version");
  if (r.schema_version > kReportSchemaVersion) {
    throw Error(ErrorCode::kReportFormat,
                "report: unsupported schema version " + std::to_string(r.schema_version));
  }
  r.input = Get<std::string>(j, "input");
  const Json& c = Get<Json>(j, "config");
  r.settings.language = Get<std::string>(c, "language");
  r.settings.ratio = Get<double>(c, "ratio");
  r.settings.gain = Get<double>(c, "eta");
  r.settings.metric_order = Get<std::vector<std::string>>(c, "metric_order");
  r.settings.stopwords = Get<std::string>(c, "stopwords");
  r.settings.lemma_rules = Get<std::string>(c, "lemma_rules");
  r.settings.lemma_exceptions = Get<std::string>(c, "lemma_exceptions");
  r.settings.verbose = Get<bool>(c, "verbose");
  r.stats = StatsFromJson(Get<Json>(j, "stats"));
  for (const Json& s : Get<Json>(j, "segments")) {
    SegmentRecord record;
    record.index = Get<std::size_t>(s, "index");
    record.text = Get<std::string>(s, "text");
    record.raw = MetricArray(s, "raw");
    record.normalized = MetricArray(s, "normalized");
    record.votes = Get<std::vector<double>>(s, "votes");
    record.p1 = Get<double>(s, "p1");
    record.selected = Get<bool>(s, "selected");
    r.segments.push_back(std::move(record));
  }
  r.selected = Get<std::vector<std::size_t>>(j, "selected");
  r.condensate = Get<std::string>(j, "condensate");
  if (j.contains("timing_ms")) r.timing_ms = Get<double>(j, "timing_ms");
  if (j.contains("matrices")) {
    const Json& m = j.at("matrices");
    MatrixDump dump;
    dump.lexicon = Get<std::vector<std::string>>(m, "lexicon");
    dump.frequency = Get<std::vector<std::vector<std::uint32_t>>>(m, "frequency");
    dump.presence = Get<std::vector<std::vector<std::uint8_t>>>(m, "presence");
    r.matrices = std::move(dump);
  }
  return r;
}

std::string StatsReportJson(std::span<const std::string> inputs,
                            std::span<const ReductionStats> stats,
                            const CorpusEstimates& corpus) {
  Json texts = Json::array();
  for (std::size_t k = 0; k < stats.size(); ++k) {
    Json row = StatsToJson(stats[k]);
    row["input"] = inputs[k];
    texts.push_back(std::move(row));
  }
  const auto summary = [](const RatioSummary& r) {
    return Json{{"mean", r.mean}, {"stddev", r.stddev}};
  };
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["texts"] = std::move(texts);
  j["corpus"] = Json{{"texts", corpus.texts},
                     {"mean_n_m", corpus.mean_n_m},
                     {"mean_n_f", corpus.mean_n_f},
                     {"mean_n_l", corpus.mean_n_l},
                     {"mean_t", corpus.mean_t},
                     {"rho_f", corpus.rho_f},
                     {"rho_l", corpus.rho_l},
                     {"rho_gamma", corpus.rho_gamma},
                     {"per_text_rho_f", summary(corpus.per_text_rho_f)},
                     {"per_text_rho_l", summary(corpus.per_text_rho_l)},
                     {"per_text_rho_gamma", summary(corpus.per_text_rho_gamma)}};
  return j.dump(2) + "\n";
}

std::string DiscriminanceReportJson(std::string_view input,
                                    std::span<const Discriminance> ranking,
                                    std::span<const MetricId> presentation_order) {
  Json rows = Json::array();
  for (const Discriminance& d : ranking) {
    rows.push_back(Json{{"metric", ToString(d.metric)}, {"stddev", d.stddev}});
  }
  Json order = Json::array();
  for (MetricId id : presentation_order) order.push_back(ToString(id));
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = input;
  j["ranking"] = std::move(rows);
  j["presentation_order"] = std::move(order);
  return j.dump(2) + "\n";
}

}  // namespace condense
