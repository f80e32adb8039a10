#include "condense/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>

#include "condense/error.hpp"

namespace condense {

std::string_view ToString(MetricId id) {
  switch (id) {
    case MetricId::kPsi:
      return "PSI";
    case MetricId::kPi:
      return "PI";
    case MetricId::kPhi:
      return "PHI";
    case MetricId::kDelta:
      return "DELTA";
    case MetricId::kInteraction:
      return "INTER";
    case MetricId::kTheta:
      return "THETA";
    case MetricId::kFrequency:
      return "FREQ";
    case MetricId::kEntropy:
      return "ENTROPY";
    case MetricId::kOmega:
      return "OMEGA";
  }
  return "?";
}

std::optional<MetricId> ParseMetricId(std::string_view name) {
  for (MetricId id : kCanonicalOrder) {
    const std::string_view candidate = ToString(id);
    if (std::ranges::equal(name, candidate, [](char a, char b) {
          return std::toupper(static_cast<unsigned char>(a)) == b;
        })) {
      return id;
    }
  }
  return std::nullopt;
}

MetricVector MetricFrequency(const TermSegmentMatrices& m) {
  MetricVector out(m.segments());
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    std::uint64_t sum = 0;
    for (std::uint32_t v : m.frequency.row(mu)) sum += v;
    out[mu] = static_cast<double>(sum);
  }
  return out;
}

MetricVector MetricInteraction(const TermSegmentMatrices& m) {
  // A present term contributes the number of other segments holding it.
  const std::vector<std::uint32_t> psi = WordWeights(m);
  MetricVector out(m.segments());
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    std::uint64_t sum = 0;
    const auto row = m.presence.row(mu);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) sum += psi[i] - 1;
    }
    out[mu] = static_cast<double>(sum);
  }
  return out;
}

namespace {

std::vector<std::uint64_t> ColumnTotals(const TermSegmentMatrices& m) {
  std::vector<std::uint64_t> totals(m.terms(), 0);
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    const auto row = m.frequency.row(mu);
    for (std::size_t i = 0; i < row.size(); ++i) totals[i] += row[i];
  }
  return totals;
}

}  // namespace

std::vector<double> TermProbabilities(const TermSegmentMatrices& m) {
  const std::vector<std::uint64_t> totals = ColumnTotals(m);
  std::uint64_t t = 0;
  for (std::uint64_t v : totals) t += v;
  std::vector<double> p(totals.size(), 0.0);
  if (t == 0) return p;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    p[i] = static_cast<double>(totals[i]) / static_cast<double>(t);
  }
  return p;
}

MetricVector MetricDelta(const TermSegmentMatrices& m) {
  // sum_i (total_i / T) * gamma_i == (sum_i total_i * gamma_i) / T; the
  // integer numerator keeps the value independent of column order.
  const std::vector<std::uint64_t> totals = ColumnTotals(m);
  std::uint64_t t = 0;
  for (std::uint64_t v : totals) t += v;
  MetricVector out(m.segments(), 0.0);
  if (t == 0) return out;
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    std::uint64_t numerator = 0;
    const auto row = m.frequency.row(mu);
    for (std::size_t i = 0; i < row.size(); ++i) numerator += totals[i] * row[i];
    out[mu] = static_cast<double>(numerator) / static_cast<double>(t);
  }
  return out;
}

MetricVector MetricEntropy(const TermSegmentMatrices& m) {
  MetricVector out(m.segments(), 0.0);
  std::vector<std::uint32_t> counts;
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    counts.clear();
    std::uint64_t total = 0;
    for (std::uint32_t v : m.frequency.row(mu)) {
      if (v == 0) continue;
      counts.push_back(v);
      total += v;
    }
    if (total == 0) continue;
    // Summing in sorted order makes the result independent of column order.
    std::ranges::sort(counts);
    double entropy = 0.0;
    for (std::uint32_t v : counts) {
      const double x = static_cast<double>(v) / static_cast<double>(total);
      entropy -= x * std::log2(x);
    }
    out[mu] = entropy;
  }
  return out;
}

HammingMatrix ComputeHammingMatrix(const TermSegmentMatrices& m) {
  const std::size_t n = m.terms();
  if (n < 2) {
    throw Error(ErrorCode::kLexiconTooSmall,
                "lexicon too small: Hamming matrix needs at least two terms");
  }
  // Term columns packed as bitsets over segments.
  const std::size_t words = (m.segments() + 63) / 64;
  std::vector<std::uint64_t> bits(n * words, 0);
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    const auto row = m.presence.row(mu);
    for (std::size_t i = 0; i < n; ++i) {
      if (row[i]) bits[i * words + mu / 64] |= std::uint64_t{1} << (mu % 64);
    }
  }
  HammingMatrix h(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint64_t* a = &bits[i * words];
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t* b = &bits[j * words];
      std::uint32_t distance = 0;
      for (std::size_t w = 0; w < words; ++w) distance += std::popcount(a[w] ^ b[w]);
      h.at(i, j) = distance;
    }
  }
  return h;
}

MetricVector MetricPsi(const TermSegmentMatrices& m, const HammingMatrix& h) {
  MetricVector out(m.segments(), 0.0);
  if (h.terms() < 2) return out;
  std::vector<std::size_t> present;
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    present.clear();
    const auto row = m.presence.row(mu);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) present.push_back(i);
    }
    std::uint64_t sum = 0;
    for (std::size_t a = 0; a < present.size(); ++a) {
      for (std::size_t b = a + 1; b < present.size(); ++b) {
        sum += h.at(present[a], present[b]);
      }
    }
    out[mu] = static_cast<double>(sum);
  }
  return out;
}

MetricVector SegmentWeights(const TermSegmentMatrices& m) {
  MetricVector out(m.segments());
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    std::uint64_t sum = 0;
    for (std::uint8_t v : m.presence.row(mu)) sum += v;
    out[mu] = static_cast<double>(sum);
  }
  return out;
}

std::vector<std::uint32_t> WordWeights(const TermSegmentMatrices& m) {
  std::vector<std::uint32_t> psi(m.terms(), 0);
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    const auto row = m.presence.row(mu);
    for (std::size_t i = 0; i < row.size(); ++i) psi[i] += row[i];
  }
  return psi;
}

MetricVector MetricTheta(const TermSegmentMatrices& m,
                         std::span<const std::uint32_t> word_weights) {
  MetricVector out(m.segments());
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    std::uint64_t sum = 0;
    const auto row = m.presence.row(mu);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) sum += word_weights[i];
    }
    out[mu] = static_cast<double>(sum);
  }
  return out;
}

MetricVector MetricPi(std::span<const double> segment_weights,
                      std::span<const double> theta) {
  MetricVector out(segment_weights.size());
  for (std::size_t mu = 0; mu < out.size(); ++mu) {
    out[mu] = segment_weights[mu] * theta[mu];
  }
  return out;
}

MetricVector MetricOmega(const TermSegmentMatrices& m,
                         std::span<const std::uint32_t> word_weights) {
  MetricVector out(m.segments());
  for (std::size_t mu = 0; mu < m.segments(); ++mu) {
    std::uint64_t sum = 0;
    const auto row = m.frequency.row(mu);
    for (std::size_t i = 0; i < row.size(); ++i) {
      sum += std::uint64_t{word_weights[i]} * row[i];
    }
    out[mu] = static_cast<double>(sum);
  }
  return out;
}

MetricVector MinMaxNormalize(std::span<const double> values) {
  MetricVector out(values.size(), 0.5);
  if (values.empty()) return out;
  const auto [lo, hi] = std::ranges::minmax(values);
  if (!(hi > lo)) return out;
  const double range = hi - lo;
  for (std::size_t k = 0; k < values.size(); ++k) {
    out[k] = std::clamp((values[k] - lo) / range, 0.0, 1.0);
  }
  return out;
}

MetricRows NormalizeRows(const MetricRows& raw) {
  MetricRows out;
  for (std::size_t k = 0; k < kMetricCount; ++k) out[k] = MinMaxNormalize(raw[k]);
  return out;
}

MetricsTable ComputeMetricsTable(const TermSegmentMatrices& m) {
  MetricsTable table;
  table.term_probabilities = TermProbabilities(m);
  table.word_weights = WordWeights(m);
  if (m.terms() >= 2) table.hamming = ComputeHammingMatrix(m);

  auto& raw = table.raw;
  raw[Index(MetricId::kFrequency)] = MetricFrequency(m);
  raw[Index(MetricId::kInteraction)] = MetricInteraction(m);
  raw[Index(MetricId::kDelta)] = MetricDelta(m);
  raw[Index(MetricId::kEntropy)] = MetricEntropy(m);
  raw[Index(MetricId::kPsi)] = MetricPsi(m, table.hamming);
  raw[Index(MetricId::kPhi)] = SegmentWeights(m);
  raw[Index(MetricId::kTheta)] = MetricTheta(m, table.word_weights);
  raw[Index(MetricId::kPi)] =
      MetricPi(raw[Index(MetricId::kPhi)], raw[Index(MetricId::kTheta)]);
  raw[Index(MetricId::kOmega)] = MetricOmega(m, table.word_weights);

  table.normalized = NormalizeRows(raw);
  return table;
}

std::vector<Discriminance> RankDiscriminance(const MetricRows& normalized) {
  std::vector<Discriminance> ranking;
  for (MetricId id : kCanonicalOrder) {
    const MetricVector& row = normalized[Index(id)];
    double stddev = 0.0;
    if (!row.empty()) {
      double mean = 0.0;
      for (double v : row) mean += v;
      mean /= static_cast<double>(row.size());
      double ss = 0.0;
      for (double v : row) ss += (v - mean) * (v - mean);
      stddev = std::sqrt(ss / static_cast<double>(row.size()));
    }
    ranking.push_back({id, stddev});
  }
  // Spreads within 1e-12 of each other count as ties; quantizing keeps the
  // comparison a strict weak ordering.
  const auto key = [](double s) { return std::llround(s * 1e12); };
  std::ranges::stable_sort(ranking, [&](const Discriminance& a, const Discriminance& b) {
    return key(a.stddev) > key(b.stddev);
  });
  return ranking;
}

}  // namespace condense
