#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "condense/preproc.hpp"

namespace condense {

// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_).subspan(r * cols_, cols_);
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Terms occurring at least twice in the document, in first-occurrence order.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<std::string> terms);

  std::size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  std::optional<std::size_t> Find(std::string_view term) const;

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Presence (xi) and frequency (gamma) matrices, segments x lexicon terms.
struct TermSegmentMatrices {
  Matrix<std::uint8_t> presence;
  Matrix<std::uint32_t> frequency;

  std::size_t segments() const { return frequency.rows(); }
  std::size_t terms() const { return frequency.cols(); }
};

struct ReductionStats {
  std::size_t n_m = 0;
  std::size_t n_f = 0;
  std::size_t n_l = 0;
  std::size_t t = 0;         // sum of all frequency-matrix entries
  std::size_t segments = 0;  // P
  double rho_f = 0.0;        // N_f / N_M
  double rho_l = 0.0;        // N_L / N_M
  double rho_gamma = 0.0;    // T / N_M
  double alpha = 0.0;        // P / N_L

  bool operator==(const ReductionStats&) const = default;
};

// Throws Error(kLexiconEmpty) when every term is a hapax.
Lexicon BuildLexicon(const Document& document);

TermSegmentMatrices BuildMatrices(const Document& document, const Lexicon& lexicon);

ReductionStats ComputeReductionStats(const Document& document,
                                     const TermSegmentMatrices& matrices);

struct RatioSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single text

  bool operator==(const RatioSummary&) const = default;
};

// Corpus-level reduction estimators. The rho_* fields are ratios of the mean
// counts; the per_text_* fields summarize the per-text ratios.
struct CorpusEstimates {
  std::size_t texts = 0;
  double mean_n_m = 0.0;
  double mean_n_f = 0.0;
  double mean_n_l = 0.0;
  double mean_t = 0.0;
  double rho_f = 0.0;
  double rho_l = 0.0;
  double rho_gamma = 0.0;
  RatioSummary per_text_rho_f;
  RatioSummary per_text_rho_l;
  RatioSummary per_text_rho_gamma;

  bool operator==(const CorpusEstimates&) const = default;
};

// Throws Error(kEmptyCorpus) on an empty list.
CorpusEstimates EstimateCorpus(std::span<const ReductionStats> stats);

}  // namespace condense
