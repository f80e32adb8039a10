#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace condense {

enum class Language { kFrench, kSpanish };

std::string_view ToString(Language language);
std::optional<Language> ParseLanguage(std::string_view tag);

struct LemmaRule {
  std::string suffix;
  std::string replacement;

  bool operator==(const LemmaRule&) const = default;
};

// Suffix-rewrite lemmatizer with an exception table.
//
// Each pass applies the first rule (in table order) whose suffix matches and
// leaves a stem of at least `min_stem` code points. Every replacement is
// strictly shorter than its suffix, so passes are repeated until no rule
// fires. Exception targets are resolved through chains and registered as
// fixed points on construction, which makes Lemmatize idempotent.
//
// Throws Error(kResourceFormat) for a rule that does not shorten or an
// exception cycle, Error(kInvalidConfig) for min_stem == 0.
class LemmaTable {
 public:
  LemmaTable() = default;
  LemmaTable(std::vector<LemmaRule> rules,
             std::vector<std::pair<std::string, std::string>> exceptions,
             std::size_t min_stem = 3);

  std::string Lemmatize(std::string_view token) const;

  const std::vector<LemmaRule>& rules() const { return rules_; }
  const std::map<std::string, std::string, std::less<>>& exceptions() const {
    return exceptions_;
  }
  std::size_t min_stem() const { return min_stem_; }

 private:
  // Returns the rewritten token, or nullopt when no rule fires.
  std::optional<std::string> ApplyFirstRule(std::string_view token) const;

  std::vector<LemmaRule> rules_;
  std::map<std::string, std::string, std::less<>> exceptions_;
  std::size_t min_stem_ = 3;
};

struct PreprocConfig {
  Language language = Language::kFrench;
  std::unordered_set<std::string> stopwords;
  std::set<char32_t> separators = {'!', '?', '.', ':'};
  bool strip_parentheticals = true;
  bool strip_digits_symbols = true;
  LemmaTable lemmas;
  // Elided prefixes ("l'", "qu'") split off before the stopword test.
  std::unordered_set<std::string> elisions;
  // Drop terms whose share of all term occurrences exceeds this value.
  // Zero disables the high-frequency filter.
  double max_term_share = 0.0;

  // Embedded stopwords, lemma rules and exceptions for `language`.
  static PreprocConfig Defaults(Language language);

  // Throws Error(kInvalidConfig) when an invariant is violated.
  void Validate() const;
};

struct Segment {
  std::size_t index = 0;
  std::string raw_text;
  std::vector<std::string> terms;

  bool operator==(const Segment&) const = default;
};

struct Document {
  std::vector<Segment> segments;
  std::size_t n_m = 0;  // word tokens in the original text
  std::size_t n_f = 0;  // term tokens after filtering and lemmatization

  std::size_t size() const { return segments.size(); }
};

// Lowercased maximal letter runs; internal hyphens and apostrophes are kept
// and normalized to ASCII. Digits and symbols never form tokens.
std::vector<std::string> Tokenize(std::string_view raw);

// Replaces each innermost "( ... )" span with spaces of the same byte length,
// so offsets into the result map 1:1 onto the input.
std::string MaskParentheticals(std::string_view raw);

std::vector<std::string> FilterTokens(std::span<const std::string> tokens,
                                      const PreprocConfig& config);

std::string Lemmatize(std::string_view token, const PreprocConfig& config);

// Splits after every separator followed by whitespace or end of text.
// Throws Error(kSegmentationEmpty) when nothing but whitespace remains.
std::vector<std::string> SegmentText(std::string_view raw,
                                     const PreprocConfig& config);

Document Preprocess(std::string_view raw, const PreprocConfig& config);

// Runs the per-segment part of the chain over already segmented text; used to
// re-present a document's segments in a different order.
Document PreprocessSegments(std::span<const std::string> raw_segments,
                            const PreprocConfig& config);

}  // namespace condense
