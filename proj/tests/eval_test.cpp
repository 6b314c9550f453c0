#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "credcheck/errors.hpp"
#include "credcheck/eval.hpp"
#include "credcheck/splitmix64.hpp"

using namespace credcheck;

namespace {

ConfusionMatrix matrix(std::uint64_t tp, std::uint64_t tn, std::uint64_t fp, std::uint64_t fn,
                       Label positive = Label::fake) {
  return {tp, tn, fp, fn, positive};
}

}  // namespace

TEST_CASE("confusion counts the four quadrants") {
  SUBCASE("perfect predictions") {
    std::vector<std::pair<Label, Label>> pairs;
    for (int i = 0; i < 3; ++i) pairs.push_back({Label::fake, Label::fake});
    for (int i = 0; i < 2; ++i) pairs.push_back({Label::real, Label::real});
    const ConfusionMatrix m = confusion(pairs, Label::fake);
    CHECK(m.tp == 3);
    CHECK(m.tn == 2);
    CHECK(m.fp == 0);
    CHECK(m.fn == 0);
  }
  SUBCASE("inverted predictions") {
    std::vector<std::pair<Label, Label>> pairs;
    for (int i = 0; i < 3; ++i) pairs.push_back({Label::real, Label::fake});
    for (int i = 0; i < 2; ++i) pairs.push_back({Label::fake, Label::real});
    const ConfusionMatrix m = confusion(pairs, Label::fake);
    CHECK(m.tp == 0);
    CHECK(m.tn == 0);
    CHECK(m.fp == 2);
    CHECK(m.fn == 3);
  }
  SUBCASE("a 236-pair fixture built to the published test counts") {
    std::vector<std::pair<Label, Label>> pairs;
    for (int i = 0; i < 113; ++i) pairs.push_back({Label::fake, Label::fake});
    for (int i = 0; i < 97; ++i) pairs.push_back({Label::real, Label::real});
    for (int i = 0; i < 5; ++i) pairs.push_back({Label::fake, Label::real});
    for (int i = 0; i < 21; ++i) pairs.push_back({Label::real, Label::fake});
    const ConfusionMatrix m = confusion(pairs, Label::fake);
    CHECK(m.tp == 113);
    CHECK(m.tn == 97);
    CHECK(m.fp == 5);
    CHECK(m.fn == 21);
  }
  SUBCASE("empty evaluation is an error") {
    CHECK_THROWS_WITH_AS(confusion({}, Label::fake), doctest::Contains("EmptyEvaluation"), Error);
  }
}

TEST_CASE("metrics for the (113, 97, 5, 21) matrix display as 88.98/95.76/84.33/89.68") {
  const MetricsReport r = metrics(matrix(113, 97, 5, 21));
  CHECK(r.n == 236);
  CHECK(r.accuracy == doctest::Approx(210.0 / 236.0).epsilon(1e-15));
  CHECK(*r.precision == doctest::Approx(113.0 / 118.0).epsilon(1e-15));
  CHECK(*r.recall == doctest::Approx(113.0 / 134.0).epsilon(1e-15));
  CHECK(*r.f1 == doctest::Approx(226.0 / 252.0).epsilon(1e-12));
  CHECK(format_percent(r.accuracy) == "88.98");
  CHECK(format_percent(*r.precision) == "95.76");
  CHECK(format_percent(*r.recall) == "84.33");
  CHECK(format_percent(*r.f1) == "89.68");
}

TEST_CASE("metrics for the (276, 275, 2, 1) matrix: accuracy/f1 99.46, precision 99.28, recall 99.64") {
  const MetricsReport r = metrics(matrix(276, 275, 2, 1));
  CHECK(format_percent(r.accuracy) == "99.46");
  CHECK(format_percent(*r.f1) == "99.46");
  // standard definitions: precision = 276/278, recall = 276/277
  CHECK(format_percent(*r.precision) == "99.28");
  CHECK(format_percent(*r.recall) == "99.64");
}

TEST_CASE("single correct positive scores ones across the board") {
  const MetricsReport r = metrics(matrix(1, 0, 0, 0));
  CHECK(r.accuracy == 1.0);
  CHECK(*r.precision == 1.0);
  CHECK(*r.recall == 1.0);
  CHECK(*r.f1 == 1.0);
}

TEST_CASE("zero-denominator metrics surface as undefined, never zero") {
  const MetricsReport r = metrics(matrix(0, 5, 0, 0));
  CHECK(r.accuracy == 1.0);
  CHECK(!r.precision);
  CHECK(!r.recall);
  CHECK(!r.f1);
  const std::string table = render_report_table({{"all negative", r}}, std::nullopt);
  CHECK(table.find("undefined") != std::string::npos);
  const std::string json = render_report_json({{"all negative", r}}, std::nullopt);
  CHECK(json.find("\"precision\": null") != std::string::npos);

  CHECK_THROWS_WITH_AS(metrics(matrix(0, 0, 0, 0)), doctest::Contains("EmptyEvaluation"), Error);
}

TEST_CASE("precision+recall of zero leaves f1 undefined") {
  const MetricsReport r = metrics(matrix(0, 0, 2, 3));
  CHECK(*r.precision == 0.0);
  CHECK(*r.recall == 0.0);
  CHECK(!r.f1);
}

TEST_CASE("gap report flags the published train/test accuracy gap of 10.48 pp") {
  const MetricsReport train = metrics(matrix(276, 275, 2, 1));
  const MetricsReport test = metrics(matrix(113, 97, 5, 21));
  const GapReport gap = gap_report(train, test);
  CHECK(format_points(gap.accuracy_pp) == "10.48");
  CHECK(gap.overfitting);
  CHECK(gap.threshold_pp == 5.0);
}

TEST_CASE("identical reports yield zero deltas and no flag") {
  const MetricsReport r = metrics(matrix(10, 10, 2, 3));
  const GapReport gap = gap_report(r, r);
  CHECK(gap.accuracy_pp == 0.0);
  CHECK(*gap.f1_pp == 0.0);
  CHECK(!gap.overfitting);
}

TEST_CASE("test better than train gives a negative delta and no flag") {
  const MetricsReport train = metrics(matrix(9, 9, 1, 1));   // 90%
  const MetricsReport test = metrics(matrix(10, 9, 1, 0));   // 95%
  const GapReport gap = gap_report(train, test);
  CHECK(gap.accuracy_pp < 0.0);
  CHECK(!gap.overfitting);
}

TEST_CASE("count conservation and label-swap duality") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<Label, Label>> pairs;
    const std::size_t n = 1 + rng.next() % 50;
    for (std::size_t i = 0; i < n; ++i) {
      pairs.push_back({rng.next() % 2 ? Label::fake : Label::real,
                       rng.next() % 2 ? Label::fake : Label::real});
    }
    const ConfusionMatrix a = confusion(pairs, Label::fake);
    CHECK(a.total() == n);
    const ConfusionMatrix b = confusion(pairs, Label::real);
    CHECK(b.tp == a.tn);
    CHECK(b.tn == a.tp);
    CHECK(b.fp == a.fn);
    CHECK(b.fn == a.fp);
    CHECK(metrics(a).accuracy == metrics(b).accuracy);
  }
}

TEST_CASE("f1 sits between precision and recall") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const ConfusionMatrix m =
        matrix(1 + rng.next() % 50, rng.next() % 50, rng.next() % 50, rng.next() % 50);
    const MetricsReport r = metrics(m);
    REQUIRE(r.f1);
    CHECK(*r.f1 >= std::min(*r.precision, *r.recall) - 1e-15);
    CHECK(*r.f1 <= std::max(*r.precision, *r.recall) + 1e-15);
  }
}

TEST_CASE("both published matrices reproduce the matching table cells within 0.005 pp") {
  const MetricsReport test = metrics(matrix(113, 97, 5, 21));
  CHECK(std::abs(test.accuracy * 100.0 - 88.98) < 0.005);
  CHECK(std::abs(*test.precision * 100.0 - 95.76) < 0.005);
  CHECK(std::abs(*test.recall * 100.0 - 84.33) < 0.005);
  CHECK(std::abs(*test.f1 * 100.0 - 89.68) < 0.005);
  const MetricsReport train = metrics(matrix(276, 275, 2, 1));
  CHECK(std::abs(train.accuracy * 100.0 - 99.46) < 0.005);
  CHECK(std::abs(*train.f1 * 100.0 - 99.46) < 0.005);
}

TEST_CASE("rendered tables carry the definitions footnote and formatted cells") {
  const MetricsReport test = metrics(matrix(113, 97, 5, 21));
  const std::string table = render_report_table({{"Test (30%)", test}}, std::nullopt);
  CHECK(table.find("88.98%") != std::string::npos);
  CHECK(table.find("95.76%") != std::string::npos);
  CHECK(table.find("84.33%") != std::string::npos);
  CHECK(table.find("89.68%") != std::string::npos);
  CHECK(table.find("precision = TP/(TP+FP)") != std::string::npos);
  CHECK(table.find("transposed") != std::string::npos);
}

TEST_CASE("display rounding is half away from zero") {
  // 0.125 is exactly representable, so these really are .5 cases
  CHECK(format_points(0.125) == "0.13");
  CHECK(format_points(-0.125) == "-0.13");
  CHECK(format_percent(0.123449) == "12.34");
  CHECK(format_points(0.0) == "0.00");
}
