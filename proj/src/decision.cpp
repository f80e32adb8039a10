#include "condense/decision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "condense/error.hpp"

namespace condense {

void DecisionConfig::Validate() const {
  if (!(gain > 0.0 && gain <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "gain must lie in (0, 1]");
  }
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "ratio must lie in (0, 1]");
  }
  std::array<bool, kMetricCount> seen{};
  for (MetricId id : metric_order) {
    if (Index(id) >= kMetricCount || seen[Index(id)]) {
      throw Error(ErrorCode::kInvalidConfig,
                  "metric order must list each metric exactly once");
    }
    seen[Index(id)] = true;
  }
}

double DecideSegment(std::span<const double> votes, double gain) {
  double p = 0.5;
  for (double vote : votes) {
    if (!(vote >= 0.0 && vote <= 1.0)) {
      throw Error(ErrorCode::kVoteOutOfRange,
                  "vote out of range: " + std::to_string(vote));
    }
    if (vote > 0.5) {
      p += gain * (1.0 - p) * (2.0 * vote - 1.0);
    } else if (vote < 0.5) {
      p -= gain * p * (1.0 - 2.0 * vote);
    }
    p = std::clamp(p, 0.0, 1.0);
  }
  return p;
}

std::vector<SegmentScore> ScoreAll(const MetricRows& normalized,
                                   const DecisionConfig& config) {
  config.Validate();
  const std::size_t p = normalized[0].size();
  std::vector<SegmentScore> scores(p);
  for (std::size_t mu = 0; mu < p; ++mu) {
    SegmentScore& score = scores[mu];
    score.segment = mu;
    score.votes.reserve(kMetricCount);
    for (MetricId id : config.metric_order) {
      score.votes.push_back(normalized[Index(id)][mu]);
    }
    score.p1 = DecideSegment(score.votes, config.gain);
  }
  return scores;
}

std::size_t SelectionSize(double ratio, std::size_t segments) {
  // The slack absorbs representation error, e.g. 0.1 * 30 = 3.0000000000000004.
  const auto wanted = static_cast<std::size_t>(
      std::ceil(ratio * static_cast<double>(segments) - 1e-9));
  return std::clamp<std::size_t>(wanted, 1, std::max<std::size_t>(segments, 1));
}

std::vector<std::size_t> Select(std::span<const SegmentScore> scores,
                                const DecisionConfig& config) {
  config.Validate();
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) {
    return scores[a].p1 > scores[b].p1;
  });
  order.resize(std::min(order.size(), SelectionSize(config.ratio, scores.size())));
  std::vector<std::size_t> selected;
  selected.reserve(order.size());
  for (std::size_t k : order) selected.push_back(scores[k].segment);
  std::ranges::sort(selected);
  return selected;
}

Summary AssembleSummary(const Document& document, std::span<const std::size_t> indices,
                        std::vector<SegmentScore> scores, const ReductionStats& stats) {
  Summary summary;
  summary.selected.assign(indices.begin(), indices.end());
  std::ranges::sort(summary.selected);
  for (std::size_t index : summary.selected) {
    if (index >= document.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "segment index " + std::to_string(index) + " out of range");
    }
    if (!summary.text.empty()) summary.text += ' ';
    summary.text += document.segments[index].raw_text;
  }
  summary.scores = std::move(scores);
  summary.stats = stats;
  return summary;
}

}  // namespace condense
