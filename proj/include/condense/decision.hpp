#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "condense/matrix.hpp"
#include "condense/metrics.hpp"
#include "condense/preproc.hpp"

namespace condense {

struct DecisionConfig {
  double gain = 0.5;  // eta, in (0, 1]
  std::array<MetricId, kMetricCount> metric_order = kCanonicalOrder;
  double ratio = 0.25;  // fraction of segments kept, in (0, 1]

  // Throws Error(kInvalidConfig) on a bad gain, ratio or metric order.
  void Validate() const;
};

// Sequential vote fusion. Starting from p1 = 0.5, each vote moves p1 towards
// 1 (vote > 0.5) or 0 (vote < 0.5) by a fraction gain * |2*vote - 1| of the
// remaining distance; a vote of exactly 0.5 leaves p1 unchanged.
//
// Throws Error(kVoteOutOfRange) if a vote lies outside [0, 1].
double DecideSegment(std::span<const double> votes, double gain);

struct SegmentScore {
  std::size_t segment = 0;
  double p1 = 0.5;            // retention probability
  std::vector<double> votes;  // normalized metric values in presentation order

  double p0() const { return 1.0 - p1; }

  bool operator==(const SegmentScore&) const = default;
};

std::vector<SegmentScore> ScoreAll(const MetricRows& normalized,
                                   const DecisionConfig& config);

// Number of segments kept: max(1, ceil(ratio * P)).
std::size_t SelectionSize(double ratio, std::size_t segments);

// Indices of the SelectionSize() highest p1, ties to the lower index, returned
// in ascending order.
std::vector<std::size_t> Select(std::span<const SegmentScore> scores,
                                const DecisionConfig& config);

struct Summary {
  std::vector<std::size_t> selected;
  std::string text;
  std::vector<SegmentScore> scores;
  ReductionStats stats;
};

// Throws Error(kIndexOutOfRange) for an index outside the document.
Summary AssembleSummary(const Document& document, std::span<const std::size_t> indices,
                        std::vector<SegmentScore> scores, const ReductionStats& stats);

}  // namespace condense
