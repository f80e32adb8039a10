#pragma once

#include <string_view>

#include "condense/decision.hpp"
#include "condense/matrix.hpp"
#include "condense/metrics.hpp"
#include "condense/preproc.hpp"

namespace condense {

// Every intermediate product of one summarization run.
struct Analysis {
  Document document;
  Lexicon lexicon;
  TermSegmentMatrices matrices;
  MetricsTable metrics;
  Summary summary;
};

// Lexicon, matrices, metrics, scoring and selection over a preprocessed
// document. Throws Error(kLexiconEmpty) for texts without repeated terms.
Analysis Analyze(Document document, const DecisionConfig& config);

// Preprocess followed by Analyze.
Analysis Summarize(std::string_view text, const PreprocConfig& preproc,
                   const DecisionConfig& decision);

}  // namespace condense
