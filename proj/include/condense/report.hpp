#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "condense/decision.hpp"
#include "condense/matrix.hpp"
#include "condense/metrics.hpp"
#include "condense/pipeline.hpp"

namespace condense {

inline constexpr int kReportSchemaVersion = 1;

// Options a run was made with, echoed into its report.
struct RunSettings {
  std::string language;
  double ratio = 0.25;
  double gain = 0.5;
  std::vector<std::string> metric_order;
  // Resource origins: a file path, or "embedded" for the built-in tables.
  std::string stopwords = "embedded";
  std::string lemma_rules = "embedded";
  std::string lemma_exceptions = "embedded";
  bool verbose = false;

  bool operator==(const RunSettings&) const = default;
};

struct SegmentRecord {
  std::size_t index = 0;
  std::string text;
  std::array<double, kMetricCount> raw{};         // canonical metric order
  std::array<double, kMetricCount> normalized{};  // canonical metric order
  std::vector<double> votes;                      // presentation order
  double p1 = 0.0;
  bool selected = false;

  bool operator==(const SegmentRecord&) const = default;
};

// Full term-segment matrices, present only in verbose reports.
struct MatrixDump {
  std::vector<std::string> lexicon;
  std::vector<std::vector<std::uint32_t>> frequency;
  std::vector<std::vector<std::uint8_t>> presence;

  bool operator==(const MatrixDump&) const = default;
};

struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::string input;
  RunSettings settings;
  ReductionStats stats;
  std::vector<SegmentRecord> segments;
  std::vector<std::size_t> selected;
  std::string condensate;
  std::optional<double> timing_ms;
  std::optional<MatrixDump> matrices;

  bool operator==(const RunReport&) const = default;
};

RunReport MakeRunReport(std::string input, RunSettings settings,
                        const Analysis& analysis);

// Serializes with a fixed key order; the output is byte-stable.
std::string ToJson(const RunReport& report);

// Unknown keys are ignored. Throws Error(kReportFormat) on missing or
// ill-typed fields and on a newer schema version.
RunReport ParseRunReport(std::string_view json);

// Per-text reduction statistics plus corpus estimators.
std::string StatsReportJson(std::span<const std::string> inputs,
                            std::span<const ReductionStats> stats,
                            const CorpusEstimates& corpus);

std::string DiscriminanceReportJson(std::string_view input,
                                    std::span<const Discriminance> ranking,
                                    std::span<const MetricId> presentation_order);

}  // namespace condense
