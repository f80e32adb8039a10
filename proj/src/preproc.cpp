#include "condense/preproc.hpp"

#include <algorithm>
#include <unordered_map>

#include "condense/error.hpp"
#include "condense/resources.hpp"
#include "condense/utf8.hpp"

namespace condense {

std::string_view ToString(Language language) {
  switch (language) {
    case Language::kFrench:
      return "fr";
    case Language::kSpanish:
      return "es";
  }
  return "?";
}

std::optional<Language> ParseLanguage(std::string_view tag) {
  if (tag == "fr") return Language::kFrench;
  if (tag == "es") return Language::kSpanish;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// LemmaTable

LemmaTable::LemmaTable(std::vector<LemmaRule> rules,
                       std::vector<std::pair<std::string, std::string>> exceptions,
                       std::size_t min_stem)
    : rules_(std::move(rules)), min_stem_(min_stem) {
  if (min_stem_ == 0) {
    throw Error(ErrorCode::kInvalidConfig, "lemma min_stem must be >= 1");
  }
  for (const LemmaRule& rule : rules_) {
    if (rule.suffix.empty() ||
        utf8::CountCodePoints(rule.replacement) >=
            utf8::CountCodePoints(rule.suffix)) {
      throw Error(ErrorCode::kResourceFormat,
                  "lemma rule '" + rule.suffix + "' -> '" + rule.replacement +
                      "': replacement must be shorter than the suffix");
    }
  }

  std::map<std::string, std::string, std::less<>> raw;
  for (auto& [surface, term] : exceptions) raw[surface] = term;

  // Follow surface -> term chains to their end so every target is final.
  for (const auto& [surface, first] : raw) {
    std::string target = first;
    for (std::size_t hops = 0;; ++hops) {
      auto next = raw.find(target);
      if (next == raw.end() || next->second == target) break;
      if (hops > raw.size()) {
        throw Error(ErrorCode::kResourceFormat,
                    "lemma exceptions contain a cycle through '" + surface + "'");
      }
      target = next->second;
    }
    exceptions_[surface] = target;
  }
  // Targets are fixed points.
  std::vector<std::string> targets;
  for (const auto& [surface, term] : exceptions_) targets.push_back(term);
  for (auto& term : targets) exceptions_.try_emplace(term, term);
}

std::optional<std::string> LemmaTable::ApplyFirstRule(std::string_view token) const {
  for (const LemmaRule& rule : rules_) {
    if (!token.ends_with(rule.suffix)) continue;
    const std::string_view stem = token.substr(0, token.size() - rule.suffix.size());
    if (utf8::CountCodePoints(stem) < min_stem_) continue;
    std::string out(stem);
    out += rule.replacement;
    return out;
  }
  return std::nullopt;
}

std::string LemmaTable::Lemmatize(std::string_view token) const {
  if (auto it = exceptions_.find(token); it != exceptions_.end()) return it->second;
  std::string current(token);
  // Each rewrite shortens the token, so this terminates.
  while (auto next = ApplyFirstRule(current)) current = std::move(*next);
  if (auto it = exceptions_.find(current); it != exceptions_.end()) return it->second;
  return current;
}

// ---------------------------------------------------------------------------
// PreprocConfig

PreprocConfig PreprocConfig::Defaults(Language language) {
  PreprocConfig config;
  config.language = language;
  config.stopwords =
      ParseStopwords(EmbeddedResource(language, ResourceKind::kStopwords));
  config.lemmas = LemmaTable(
      ParseLemmaRules(EmbeddedResource(language, ResourceKind::kLemmaRules)),
      ParseLemmaExceptions(
          EmbeddedResource(language, ResourceKind::kLemmaExceptions)));
  if (language == Language::kFrench) {
    config.elisions = {"c",    "d",      "j",       "l",       "m",
                       "n",    "s",      "t",       "qu",      "jusqu",
                       "lorsqu", "puisqu", "quoiqu", "presqu"};
  }
  return config;
}

void PreprocConfig::Validate() const {
  if (separators.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "separator set is empty");
  }
  if (!(max_term_share >= 0.0 && max_term_share <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "max_term_share must lie in [0, 1]");
  }
}

// ---------------------------------------------------------------------------
// Stages

std::vector<std::string> Tokenize(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    const utf8::Decoded d = utf8::DecodeAt(raw, pos);
    if (utf8::IsLetter(d.cp)) {
      utf8::Append(current, utf8::ToLower(d.cp));
      pos += d.length;
      continue;
    }
    const bool joiner = utf8::IsHyphen(d.cp) || utf8::IsApostrophe(d.cp);
    if (joiner && !current.empty() && pos + d.length < raw.size() &&
        utf8::IsLetter(utf8::DecodeAt(raw, pos + d.length).cp)) {
      current.push_back(utf8::IsHyphen(d.cp) ? '-' : '\'');
      pos += d.length;
      continue;
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
    pos += d.length;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string MaskParentheticals(std::string_view raw) {
  std::string out(raw);
  std::size_t open = std::string::npos;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == '(') {
      open = i;
    } else if (out[i] == ')' && open != std::string::npos) {
      std::fill(out.begin() + static_cast<std::ptrdiff_t>(open),
                out.begin() + static_cast<std::ptrdiff_t>(i) + 1, ' ');
      open = std::string::npos;
    }
  }
  return out;
}

namespace {

bool HasLetter(std::string_view token) {
  for (std::size_t pos = 0; pos < token.size();) {
    const utf8::Decoded d = utf8::DecodeAt(token, pos);
    if (utf8::IsLetter(d.cp)) return true;
    pos += d.length;
  }
  return false;
}

std::string_view StripElision(std::string_view token, const PreprocConfig& config) {
  const std::size_t apostrophe = token.find('\'');
  if (apostrophe == std::string_view::npos) return token;
  if (config.elisions.contains(std::string(token.substr(0, apostrophe)))) {
    return token.substr(apostrophe + 1);
  }
  return token;
}

struct Span {
  std::size_t begin;
  std::size_t end;
};

std::vector<Span> SegmentSpans(std::string_view text,
                               const std::set<char32_t>& separators) {
  std::vector<Span> spans;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    const utf8::Decoded d = utf8::DecodeAt(text, pos);
    pos += d.length;
    if (!separators.contains(d.cp)) continue;
    if (pos == text.size() || utf8::IsWhitespace(utf8::DecodeAt(text, pos).cp)) {
      spans.push_back({start, pos});
      start = pos;
    }
  }
  if (start < text.size()) spans.push_back({start, text.size()});
  return spans;
}

std::vector<std::string> LemmatizeAll(std::span<const std::string> tokens,
                                      const PreprocConfig& config) {
  std::vector<std::string> terms;
  terms.reserve(tokens.size());
  for (const auto& token : tokens) terms.push_back(config.lemmas.Lemmatize(token));
  return terms;
}

void DropHighFrequencyTerms(Document& doc, double max_share) {
  if (max_share <= 0.0 || doc.n_f == 0) return;
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& segment : doc.segments) {
    for (const auto& term : segment.terms) ++counts[term];
  }
  const double total = static_cast<double>(doc.n_f);
  doc.n_f = 0;
  for (auto& segment : doc.segments) {
    std::erase_if(segment.terms, [&](const std::string& term) {
      return static_cast<double>(counts[term]) / total > max_share;
    });
    doc.n_f += segment.terms.size();
  }
}

// Tokenizes `masked`, filters and lemmatizes, appending to `doc`.
void AddSegment(Document& doc, std::string raw_text, std::string_view masked,
                const PreprocConfig& config) {
  const std::vector<std::string> tokens = Tokenize(masked);
  doc.n_m += tokens.size();
  Segment segment;
  segment.index = doc.segments.size();
  segment.raw_text = std::move(raw_text);
  segment.terms = LemmatizeAll(FilterTokens(tokens, config), config);
  doc.n_f += segment.terms.size();
  doc.segments.push_back(std::move(segment));
}

}  // namespace

std::vector<std::string> FilterTokens(std::span<const std::string> tokens,
                                      const PreprocConfig& config) {
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (config.strip_digits_symbols && !HasLetter(token)) continue;
    const std::string_view word = StripElision(token, config);
    if (word.empty() || config.stopwords.contains(std::string(word)) ||
        config.stopwords.contains(token)) {
      continue;
    }
    kept.emplace_back(word);
  }
  return kept;
}

std::string Lemmatize(std::string_view token, const PreprocConfig& config) {
  return config.lemmas.Lemmatize(token);
}

std::vector<std::string> SegmentText(std::string_view raw,
                                     const PreprocConfig& config) {
  config.Validate();
  std::vector<std::string> segments;
  for (const Span& span : SegmentSpans(raw, config.separators)) {
    const std::string_view text =
        utf8::Trim(raw.substr(span.begin, span.end - span.begin));
    if (!text.empty()) segments.emplace_back(text);
  }
  if (segments.empty()) {
    throw Error(ErrorCode::kSegmentationEmpty, "segmentation empty: no text to segment");
  }
  return segments;
}

Document Preprocess(std::string_view raw, const PreprocConfig& config) {
  config.Validate();
  const std::string masked =
      config.strip_parentheticals ? MaskParentheticals(raw) : std::string(raw);
  Document doc;
  for (const Span& span : SegmentSpans(masked, config.separators)) {
    const std::size_t length = span.end - span.begin;
    const std::string_view text = utf8::Trim(raw.substr(span.begin, length));
    if (text.empty()) continue;
    AddSegment(doc, std::string(text),
               std::string_view(masked).substr(span.begin, length), config);
  }
  if (doc.segments.empty()) {
    throw Error(ErrorCode::kSegmentationEmpty, "segmentation empty: no text to segment");
  }
  DropHighFrequencyTerms(doc, config.max_term_share);
  return doc;
}

Document PreprocessSegments(std::span<const std::string> raw_segments,
                            const PreprocConfig& config) {
  config.Validate();
  Document doc;
  for (const auto& raw : raw_segments) {
    const std::string_view text = utf8::Trim(raw);
    if (text.empty()) continue;
    const std::string masked =
        config.strip_parentheticals ? MaskParentheticals(text) : std::string(text);
    AddSegment(doc, std::string(text), masked, config);
  }
  if (doc.segments.empty()) {
    throw Error(ErrorCode::kSegmentationEmpty, "segmentation empty: no text to segment");
  }
  DropHighFrequencyTerms(doc, config.max_term_share);
  return doc;
}

}  // namespace condense
