#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "condense/matrix.hpp"

namespace condense {

// The nine segment metrics. Enumerator values follow the default
// presentation order used by the decision stage.
enum class MetricId : std::uint8_t {
  kPsi,          // Hamming distances between co-present terms
  kPi,           // heavy Hamming weight
  kPhi,          // segment Hamming weight
  kDelta,        // frequency-weighted term probabilities
  kInteraction,  // terms shared with other segments
  kTheta,        // sum of word Hamming weights
  kFrequency,    // term frequency sum
  kEntropy,      // Shannon entropy of the segment's term distribution
  kOmega,        // frequency-weighted word Hamming weights
};

inline constexpr std::size_t kMetricCount = 9;

inline constexpr std::array<MetricId, kMetricCount> kCanonicalOrder = {
    MetricId::kPsi,         MetricId::kPi,    MetricId::kPhi,
    MetricId::kDelta,       MetricId::kInteraction, MetricId::kTheta,
    MetricId::kFrequency,   MetricId::kEntropy,     MetricId::kOmega,
};

std::string_view ToString(MetricId id);
// Accepts the names produced by ToString, case-insensitively.
std::optional<MetricId> ParseMetricId(std::string_view name);

constexpr std::size_t Index(MetricId id) { return static_cast<std::size_t>(id); }

// Upper-triangular term x term matrix: at(i, j), i < j, counts the segments
// in which exactly one of the two terms is present.
class HammingMatrix {
 public:
  HammingMatrix() = default;
  explicit HammingMatrix(std::size_t terms)
      : terms_(terms), cells_(terms < 2 ? 0 : terms * (terms - 1) / 2) {}

  std::size_t terms() const { return terms_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return cells_[Offset(i, j)]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return cells_[Offset(i, j)]; }

  bool operator==(const HammingMatrix&) const = default;

 private:
  std::size_t Offset(std::size_t i, std::size_t j) const {
    // Row i holds columns i+1 .. terms-1.
    return i * (2 * terms_ - i - 1) / 2 + (j - i - 1);
  }

  std::size_t terms_ = 0;
  std::vector<std::uint32_t> cells_;
};

using MetricVector = std::vector<double>;
using MetricRows = std::array<MetricVector, kMetricCount>;

MetricVector MetricFrequency(const TermSegmentMatrices& m);
MetricVector MetricInteraction(const TermSegmentMatrices& m);
// p_i: share of all frequency mass held by term i. Requires T > 0.
std::vector<double> TermProbabilities(const TermSegmentMatrices& m);
MetricVector MetricDelta(const TermSegmentMatrices& m);
MetricVector MetricEntropy(const TermSegmentMatrices& m);

// Throws Error(kLexiconTooSmall) when the lexicon has fewer than two terms.
HammingMatrix ComputeHammingMatrix(const TermSegmentMatrices& m);
MetricVector MetricPsi(const TermSegmentMatrices& m, const HammingMatrix& h);

// Row sums of the presence matrix (phi).
MetricVector SegmentWeights(const TermSegmentMatrices& m);
// Column sums of the presence matrix (psi).
std::vector<std::uint32_t> WordWeights(const TermSegmentMatrices& m);

MetricVector MetricTheta(const TermSegmentMatrices& m,
                         std::span<const std::uint32_t> word_weights);
MetricVector MetricPi(std::span<const double> segment_weights,
                      std::span<const double> theta);
MetricVector MetricOmega(const TermSegmentMatrices& m,
                         std::span<const std::uint32_t> word_weights);

// Min-max scaling into [0, 1]; a constant vector maps to 0.5 everywhere.
MetricVector MinMaxNormalize(std::span<const double> values);
MetricRows NormalizeRows(const MetricRows& raw);

struct MetricsTable {
  MetricRows raw;         // indexed by Index(MetricId)
  MetricRows normalized;  // same layout, values in [0, 1]
  std::vector<double> term_probabilities;
  std::vector<std::uint32_t> word_weights;
  HammingMatrix hamming;  // empty when the lexicon has a single term

  std::size_t segments() const { return raw[0].size(); }
  const MetricVector& Raw(MetricId id) const { return raw[Index(id)]; }
  const MetricVector& Normalized(MetricId id) const { return normalized[Index(id)]; }
};

// Computes all nine metrics and their normalized form. With a one-term
// lexicon no term pair exists and Psi is zero for every segment.
MetricsTable ComputeMetricsTable(const TermSegmentMatrices& m);

struct Discriminance {
  MetricId metric;
  double stddev;  // population standard deviation of the normalized row
};

// Metrics by descending spread; equal spreads keep canonical order.
std::vector<Discriminance> RankDiscriminance(const MetricRows& normalized);

}  // namespace condense
