#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "condense/decision.hpp"
#include "condense/error.hpp"
#include "condense/metrics.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace condense;

namespace {

std::vector<SegmentScore> Scores(const std::vector<double>& p1) {
  std::vector<SegmentScore> out;
  for (std::size_t k = 0; k < p1.size(); ++k) out.push_back({k, p1[k], {}});
  return out;
}

DecisionConfig WithRatio(double ratio) {
  DecisionConfig c;
  c.ratio = ratio;
  return c;
}

}  // namespace

TEST_CASE("two-vote example") {
  CHECK(DecideSegment(std::vector<double>{0.8}, 0.5) == doctest::Approx(0.65));
  CHECK(DecideSegment(std::vector<double>{0.8, 0.3}, 0.5) == doctest::Approx(0.52));
}

TEST_CASE("neutral and empty votes") {
  CHECK(DecideSegment(std::vector<double>{}, 0.5) == 0.5);
  CHECK(DecideSegment(std::vector<double>{0.5, 0.5, 0.5}, 0.9) == 0.5);
  CHECK(DecideSegment(std::vector<double>{1.0}, 1.0) == 1.0);
  CHECK(DecideSegment(std::vector<double>{0.0}, 1.0) == 0.0);
}

TEST_CASE("votes outside the unit interval are rejected") {
  for (double bad : {-0.01, 1.01, std::nan("")}) {
    try {
      DecideSegment(std::vector<double>{0.5, bad}, 0.5);
      FAIL("expected VoteOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kVoteOutOfRange);
    }
  }
}

TEST_CASE("metric order changes the outcome") {
  CHECK(DecideSegment(std::vector<double>{1.0, 0.0}, 0.5) == doctest::Approx(0.375));
  CHECK(DecideSegment(std::vector<double>{0.0, 1.0}, 0.5) == doctest::Approx(0.625));
}

TEST_CASE("M1 scores against the oracle") {
  const MetricsTable t = ComputeMetricsTable(test_support::ToMatrices(test_support::kM1));
  const DecisionConfig config;
  const auto scores = ScoreAll(t.normalized, config);
  REQUIRE(scores.size() == 3);
  const double want[] = {0.002560101405067094, 0.658203125, 0.49609375};
  for (std::size_t mu = 0; mu < 3; ++mu) {
    std::vector<double> votes;
    for (MetricId id : config.metric_order) votes.push_back(t.Normalized(id)[mu]);
    CHECK(scores[mu].segment == mu);
    CHECK(scores[mu].votes == votes);
    CHECK(scores[mu].p1 == doctest::Approx(oracle::Decide(votes, 0.5)).epsilon(1e-12));
    CHECK(scores[mu].p1 == doctest::Approx(want[mu]).epsilon(1e-12));
    CHECK(scores[mu].p0() + scores[mu].p1 == 1.0);
  }
  CHECK(Select(scores, config) == std::vector<std::size_t>{1});
}

TEST_CASE("selection size") {
  CHECK(SelectionSize(0.25, 1) == 1);
  CHECK(SelectionSize(0.25, 4) == 1);
  CHECK(SelectionSize(0.25, 5) == 2);
  CHECK(SelectionSize(0.25, 12) == 3);
  CHECK(SelectionSize(0.1, 30) == 3);   // 0.1 * 30 is 3.0000000000000004
  CHECK(SelectionSize(0.3, 10) == 3);
  CHECK(SelectionSize(1.0, 7) == 7);
  CHECK(SelectionSize(0.01, 3) == 1);
}

TEST_CASE("selection examples") {
  CHECK(Select(Scores({0.1, 0.8, 0.25}), WithRatio(0.25)) == std::vector<std::size_t>{1});
  CHECK(Select(Scores({0.5, 0.5, 0.5, 0.5}), WithRatio(0.5)) == std::vector<std::size_t>{0, 1});
  CHECK(Select(Scores({0.9, 0.1, 0.7}), WithRatio(1.0)) == std::vector<std::size_t>{0, 1, 2});
  CHECK(Select(Scores({0.2, 0.9, 0.3, 0.8, 0.1}), WithRatio(0.4)) ==
        std::vector<std::size_t>{1, 3});
  CHECK(Select(Scores({0.3}), WithRatio(0.25)) == std::vector<std::size_t>{0});
}

TEST_CASE("summary assembly") {
  Document doc;
  doc.segments = {{0, "A.", {"a"}}, {1, "B.", {"b"}}, {2, "C.", {"c"}}};
  const std::vector<std::size_t> pick = {0, 2};
  const Summary s = AssembleSummary(doc, pick, {}, {});
  CHECK(s.text == "A. C.");
  CHECK(s.selected == pick);

  const std::vector<std::size_t> bad = {3};
  try {
    AssembleSummary(doc, bad, {}, {});
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIndexOutOfRange);
  }
}

TEST_CASE("decision config validation") {
  auto rejects = [](DecisionConfig c) {
    try {
      c.Validate();
      return false;
    } catch (const Error& e) {
      return e.code() == ErrorCode::kInvalidConfig;
    }
  };
  CHECK_NOTHROW(DecisionConfig{}.Validate());
  DecisionConfig c;
  c.gain = 0.0;
  CHECK(rejects(c));
  c.gain = 1.5;
  CHECK(rejects(c));
  c = {};
  c.ratio = 0.0;
  CHECK(rejects(c));
  c.ratio = 1.2;
  CHECK(rejects(c));
  c = {};
  c.metric_order[1] = c.metric_order[0];
  CHECK(rejects(c));
}

TEST_CASE("property: bounded, amplifying, monotone") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> gain(0.01, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<double> votes(n);
    for (double& v : votes) v = unit(rng);
    const double eta = gain(rng);
    const double p = DecideSegment(votes, eta);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    CHECK(p == doctest::Approx(oracle::Decide(votes, eta)).epsilon(1e-12));

    // A single extra favourable vote never lowers p1, an unfavourable one
    // never raises it.
    std::vector<double> up = votes;
    up.push_back(0.5 + 0.5 * unit(rng));
    CHECK(DecideSegment(up, eta) >= p);
    std::vector<double> down = votes;
    down.push_back(0.5 * unit(rng));
    CHECK(DecideSegment(down, eta) <= p);

    // Raising any one vote never lowers the outcome.
    std::vector<double> raised = votes;
    const std::size_t k = rng() % n;
    raised[k] = raised[k] + (1.0 - raised[k]) * unit(rng);
    CHECK(DecideSegment(raised, eta) >= p - 1e-15);
  }
}

TEST_CASE("property: unanimous votes converge") {
  const std::vector<double> high(60, 0.9);
  const std::vector<double> low(60, 0.1);
  CHECK(DecideSegment(high, 0.5) > 1.0 - 1e-6);
  CHECK(DecideSegment(low, 0.5) < 1e-6);
  double prev = 0.5;
  for (std::size_t n = 1; n <= 20; ++n) {
    const double p = DecideSegment(std::span(high).first(n), 0.5);
    CHECK(p > prev);
    prev = p;
  }
}
