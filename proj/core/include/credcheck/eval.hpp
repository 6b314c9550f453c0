#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "credcheck/corpus.hpp"

namespace credcheck {

struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  Label positive_class = Label::fake;

  std::uint64_t total() const { return tp + tn + fp + fn; }
};

// accuracy = (tp+tn)/n, precision = tp/(tp+fp), recall = tp/(tp+fn),
// f1 = 2PR/(P+R). Ratios with a zero denominator are carried as nullopt
// ("undefined" in rendered output), never as 0 or NaN.
struct MetricsReport {
  ConfusionMatrix matrix;
  std::uint64_t n = 0;
  double accuracy = 0.0;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

ConfusionMatrix confusion(const std::vector<std::pair<Label, Label>>& predicted_actual,
                          Label positive_class);

MetricsReport metrics(const ConfusionMatrix& matrix);

// Per-metric train-minus-test deltas in percentage points; the flag raises
// when the accuracy delta exceeds the threshold.
struct GapReport {
  double accuracy_pp = 0.0;
  std::optional<double> precision_pp;
  std::optional<double> recall_pp;
  std::optional<double> f1_pp;
  double threshold_pp = 5.0;
  bool overfitting = false;
};

GapReport gap_report(const MetricsReport& train, const MetricsReport& test,
                     double threshold_pp = 5.0);

// Display rounding: half away from zero, two decimals, value given as a
// fraction ("0.889830..." -> "88.98").
std::string format_percent(double fraction);
// Same rounding for values already expressed in percentage points.
std::string format_points(double points);

struct ReportRow {
  std::string label;
  MetricsReport report;
};

// Aligned confusion-matrix + metrics tables with a definitions footnote.
std::string render_report_table(const std::vector<ReportRow>& rows,
                                const std::optional<GapReport>& gap);

// Machine-readable variant; values unrounded, undefined metrics are null.
std::string render_report_json(const std::vector<ReportRow>& rows,
                               const std::optional<GapReport>& gap);

// The footnote the table rendering always carries, naming the exact formulas
// so externally published figures that interchange precision and recall can
// be reconciled with this output.
const char* metric_definitions_note();

}  // namespace credcheck
