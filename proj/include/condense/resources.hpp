#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "condense/preproc.hpp"

namespace condense {

// Stopword file: one surface form per line, '#' starts a comment line.
std::unordered_set<std::string> ParseStopwords(std::string_view content);

// Lemma-rule file: ordered "suffix<TAB>replacement" lines. An empty
// replacement strips the suffix.
std::vector<LemmaRule> ParseLemmaRules(std::string_view content);

// Lemma-exception file: "surface<TAB>term" lines.
std::vector<std::pair<std::string, std::string>> ParseLemmaExceptions(
    std::string_view content);

// Reads a whole file; throws std::filesystem::filesystem_error on failure.
std::string ReadFile(const std::filesystem::path& path);

enum class ResourceKind { kStopwords, kLemmaRules, kLemmaExceptions };

// Resource files compiled into the library from resources/<lang>/.
std::string_view EmbeddedResource(Language language, ResourceKind kind);

}  // namespace condense
