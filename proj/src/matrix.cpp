#include "condense/matrix.hpp"

#include <cmath>

#include "condense/error.hpp"

namespace condense {

Lexicon::Lexicon(std::vector<std::string> terms) : terms_(std::move(terms)) {
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::optional<std::size_t> Lexicon::Find(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Lexicon BuildLexicon(const Document& document) {
  std::unordered_map<std::string_view, std::size_t> counts;
  std::vector<std::string_view> first_seen;
  for (const Segment& segment : document.segments) {
    for (const std::string& term : segment.terms) {
      if (counts[term]++ == 0) first_seen.push_back(term);
    }
  }
  std::vector<std::string> terms;
  for (std::string_view term : first_seen) {
    if (counts[term] >= 2) terms.emplace_back(term);
  }
  if (terms.empty()) {
    throw Error(ErrorCode::kLexiconEmpty,
                "lexicon empty: no term occurs more than once (text too small "
                "to condense)");
  }
  return Lexicon(std::move(terms));
}

TermSegmentMatrices BuildMatrices(const Document& document, const Lexicon& lexicon) {
  const std::size_t p = document.size();
  const std::size_t n = lexicon.size();
  TermSegmentMatrices m{Matrix<std::uint8_t>(p, n), Matrix<std::uint32_t>(p, n)};
  for (std::size_t mu = 0; mu < p; ++mu) {
    for (const std::string& term : document.segments[mu].terms) {
      if (auto column = lexicon.Find(term)) {
        ++m.frequency(mu, *column);
        m.presence(mu, *column) = 1;
      }
    }
  }
  return m;
}

ReductionStats ComputeReductionStats(const Document& document,
                                     const TermSegmentMatrices& matrices) {
  ReductionStats s;
  s.n_m = document.n_m;
  s.n_f = document.n_f;
  s.n_l = matrices.terms();
  s.segments = matrices.segments();
  for (std::size_t mu = 0; mu < matrices.segments(); ++mu) {
    for (std::uint32_t v : matrices.frequency.row(mu)) s.t += v;
  }
  const auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  s.rho_f = ratio(s.n_f, s.n_m);
  s.rho_l = ratio(s.n_l, s.n_m);
  s.rho_gamma = ratio(s.t, s.n_m);
  s.alpha = ratio(s.segments, s.n_l);
  return s;
}

namespace {

RatioSummary Summarize(std::span<const double> values) {
  RatioSummary out;
  for (double v : values) out.mean += v;
  out.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

}  // namespace

CorpusEstimates EstimateCorpus(std::span<const ReductionStats> stats) {
  if (stats.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "empty corpus: no texts to estimate over");
  }
  CorpusEstimates e;
  e.texts = stats.size();
  std::vector<double> rho_f, rho_l, rho_gamma;
  for (const ReductionStats& s : stats) {
    e.mean_n_m += static_cast<double>(s.n_m);
    e.mean_n_f += static_cast<double>(s.n_f);
    e.mean_n_l += static_cast<double>(s.n_l);
    e.mean_t += static_cast<double>(s.t);
    rho_f.push_back(s.rho_f);
    rho_l.push_back(s.rho_l);
    rho_gamma.push_back(s.rho_gamma);
  }
  const double tau = static_cast<double>(e.texts);
  e.mean_n_m /= tau;
  e.mean_n_f /= tau;
  e.mean_n_l /= tau;
  e.mean_t /= tau;
  if (e.mean_n_m > 0.0) {
    e.rho_f = e.mean_n_f / e.mean_n_m;
    e.rho_l = e.mean_n_l / e.mean_n_m;
    e.rho_gamma = e.mean_t / e.mean_n_m;
  }
  e.per_text_rho_f = Summarize(rho_f);
  e.per_text_rho_l = Summarize(rho_l);
  e.per_text_rho_gamma = Summarize(rho_gamma);
  return e;
}

}  // namespace condense
