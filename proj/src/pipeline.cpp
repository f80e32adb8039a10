#include "condense/pipeline.hpp"

namespace condense {

Analysis Analyze(Document document, const DecisionConfig& config) {
  config.Validate();
  Analysis a;
  a.lexicon = BuildLexicon(document);
  a.matrices = BuildMatrices(document, a.lexicon);
  a.metrics = ComputeMetricsTable(a.matrices);
  const ReductionStats stats = ComputeReductionStats(document, a.matrices);
  std::vector<SegmentScore> scores = ScoreAll(a.metrics.normalized, config);
  const std::vector<std::size_t> selected = Select(scores, config);
  a.summary = AssembleSummary(document, selected, std::move(scores), stats);
  a.document = std::move(document);
  return a;
}

Analysis Summarize(std::string_view text, const PreprocConfig& preproc,
                   const DecisionConfig& decision) {
  return Analyze(Preprocess(text, preproc), decision);
}

}  // namespace condense
