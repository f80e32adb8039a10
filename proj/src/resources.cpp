#include "condense/resources.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "condense/error.hpp"
#include "condense/utf8.hpp"

namespace condense {
namespace {

// Calls `fn(line_number, line)` for each non-blank, non-comment line with
// surrounding whitespace removed. A trailing '\r' is dropped.
template <typename Fn>
void ForEachDataLine(std::string_view content, Fn&& fn) {
  std::size_t line_number = 0;
  while (!content.empty()) {
    ++line_number;
    const std::size_t eol = content.find('\n');
    std::string_view line = content.substr(0, eol);
    content = eol == std::string_view::npos ? std::string_view{}
                                            : content.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view trimmed = utf8::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    fn(line_number, line);
  }
}

std::pair<std::string_view, std::string_view> SplitTab(std::size_t line_number,
                                                       std::string_view line,
                                                       std::string_view what) {
  const std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kResourceFormat,
                std::string(what) + " line " + std::to_string(line_number) +
                    ": expected exactly two tab-separated fields");
  }
  return {utf8::Trim(line.substr(0, tab)), utf8::Trim(line.substr(tab + 1))};
}

}  // namespace

std::unordered_set<std::string> ParseStopwords(std::string_view content) {
  std::unordered_set<std::string> words;
  ForEachDataLine(content, [&](std::size_t, std::string_view line) {
    const std::string word = utf8::Lowercase(utf8::Trim(line));
    // Typographic apostrophes are stored in the ASCII form the tokenizer emits.
    std::string normalized;
    for (std::size_t pos = 0; pos < word.size();) {
      const auto d = utf8::DecodeAt(word, pos);
      utf8::Append(normalized, utf8::IsApostrophe(d.cp) ? U'\'' : d.cp);
      pos += d.length;
    }
    words.insert(std::move(normalized));
  });
  return words;
}

std::vector<LemmaRule> ParseLemmaRules(std::string_view content) {
  std::vector<LemmaRule> rules;
  ForEachDataLine(content, [&](std::size_t line_number, std::string_view line) {
    auto [suffix, replacement] = SplitTab(line_number, line, "lemma rule");
    if (suffix.empty()) {
      throw Error(ErrorCode::kResourceFormat,
                  "lemma rule line " + std::to_string(line_number) +
                      ": empty suffix");
    }
    rules.push_back({utf8::Lowercase(suffix), utf8::Lowercase(replacement)});
  });
  return rules;
}

std::vector<std::pair<std::string, std::string>> ParseLemmaExceptions(
    std::string_view content) {
  std::vector<std::pair<std::string, std::string>> exceptions;
  ForEachDataLine(content, [&](std::size_t line_number, std::string_view line) {
    auto [surface, term] = SplitTab(line_number, line, "lemma exception");
    if (surface.empty() || term.empty()) {
      throw Error(ErrorCode::kResourceFormat,
                  "lemma exception line " + std::to_string(line_number) +
                      ": empty field");
    }
    exceptions.emplace_back(utf8::Lowercase(surface), utf8::Lowercase(term));
  });
  return exceptions;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::filesystem::filesystem_error(
        "cannot open file", path,
        std::make_error_code(std::errc::no_such_file_or_directory));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw std::filesystem::filesystem_error(
        "cannot read file", path, std::make_error_code(std::errc::io_error));
  }
  return std::move(buffer).str();
}

}  // namespace condense
