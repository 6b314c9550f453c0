#include "credcheck/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "credcheck/errors.hpp"

namespace credcheck {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string round2(double value) {
  const double scaled = std::floor(std::abs(value) * 100.0 + 0.5) / 100.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", std::copysign(scaled, value));
  return buf;
}

std::string percent_cell(const std::optional<double>& fraction) {
  return fraction ? format_percent(*fraction) + "%" : "undefined";
}

std::string points_cell(const std::optional<double>& points) {
  return points ? format_points(*points) : "undefined";
}

void emit_row(std::ostringstream& out, const std::string& label,
              const std::vector<std::string>& cells, std::size_t label_width) {
  out << "  " << std::left << std::setw(static_cast<int>(label_width)) << label << std::right;
  for (const auto& cell : cells) out << std::setw(12) << cell;
  out << '\n';
}

}  // namespace

ConfusionMatrix confusion(const std::vector<std::pair<Label, Label>>& predicted_actual,
                          Label positive_class) {
  if (predicted_actual.empty()) raise(ErrorCode::EmptyEvaluation, "no prediction pairs");
  ConfusionMatrix m;
  m.positive_class = positive_class;
  for (const auto& [predicted, actual] : predicted_actual) {
    const bool predicted_pos = predicted == positive_class;
    const bool actual_pos = actual == positive_class;
    if (predicted_pos && actual_pos) ++m.tp;
    else if (!predicted_pos && !actual_pos) ++m.tn;
    else if (predicted_pos) ++m.fp;
    else ++m.fn;
  }
  return m;
}

MetricsReport metrics(const ConfusionMatrix& matrix) {
  const std::uint64_t n = matrix.total();
  if (n == 0) raise(ErrorCode::EmptyEvaluation, "confusion matrix counts sum to zero");

  MetricsReport report;
  report.matrix = matrix;
  report.n = n;
  report.accuracy = static_cast<double>(matrix.tp + matrix.tn) / static_cast<double>(n);
  if (matrix.tp + matrix.fp > 0) {
    report.precision = static_cast<double>(matrix.tp) / static_cast<double>(matrix.tp + matrix.fp);
  }
  if (matrix.tp + matrix.fn > 0) {
    report.recall = static_cast<double>(matrix.tp) / static_cast<double>(matrix.tp + matrix.fn);
  }
  if (report.precision && report.recall && (*report.precision + *report.recall) > 0.0) {
    report.f1 =
        2.0 * *report.precision * *report.recall / (*report.precision + *report.recall);
  }
  return report;
}

GapReport gap_report(const MetricsReport& train, const MetricsReport& test, double threshold_pp) {
  GapReport gap;
  gap.threshold_pp = threshold_pp;
  gap.accuracy_pp = (train.accuracy - test.accuracy) * 100.0;
  if (train.precision && test.precision) gap.precision_pp = (*train.precision - *test.precision) * 100.0;
  if (train.recall && test.recall) gap.recall_pp = (*train.recall - *test.recall) * 100.0;
  if (train.f1 && test.f1) gap.f1_pp = (*train.f1 - *test.f1) * 100.0;
  gap.overfitting = gap.accuracy_pp > threshold_pp;
  return gap;
}

std::string format_percent(double fraction) {
  return round2(fraction * 100.0);
}

std::string format_points(double points) {
  return round2(points);
}

const char* metric_definitions_note() {
  return "note: accuracy = (TP+TN)/N, precision = TP/(TP+FP), recall = TP/(TP+FN),\n"
         "f1 = 2*P*R/(P+R). Published figures that interchange the precision and\n"
         "recall definitions appear transposed relative to this output.";
}

std::string render_report_table(const std::vector<ReportRow>& rows,
                                const std::optional<GapReport>& gap) {
  std::size_t label_width = std::string("delta (pp)").size();
  for (const auto& row : rows) label_width = std::max(label_width, row.label.size());
  label_width += 2;

  std::ostringstream out;
  if (!rows.empty()) {
    out << "confusion matrix (positive class: "
        << label_name(rows.front().report.matrix.positive_class) << ")\n";
    emit_row(out, "", {"TP", "TN", "FP", "FN", "N"}, label_width);
    for (const auto& row : rows) {
      const auto& m = row.report.matrix;
      emit_row(out, row.label,
               {std::to_string(m.tp), std::to_string(m.tn), std::to_string(m.fp),
                std::to_string(m.fn), std::to_string(row.report.n)},
               label_width);
    }
    out << '\n';
    out << "metrics\n";
    emit_row(out, "", {"Accuracy", "Precision", "Recall", "F1 Score"}, label_width);
    for (const auto& row : rows) {
      const auto& r = row.report;
      emit_row(out, row.label,
               {percent_cell(r.accuracy), percent_cell(r.precision), percent_cell(r.recall),
                percent_cell(r.f1)},
               label_width);
    }
  }
  if (gap) {
    emit_row(out, "delta (pp)",
             {points_cell(gap->accuracy_pp), points_cell(gap->precision_pp),
              points_cell(gap->recall_pp), points_cell(gap->f1_pp)},
             label_width);
    out << '\n';
    if (gap->overfitting) {
      out << "warning: accuracy gap " << format_points(gap->accuracy_pp)
          << " pp exceeds threshold " << format_points(gap->threshold_pp)
          << " pp (possible overfitting)\n";
    }
  } else {
    out << '\n';
  }
  out << metric_definitions_note() << '\n';
  return std::move(out).str();
}

std::string render_report_json(const std::vector<ReportRow>& rows,
                               const std::optional<GapReport>& gap) {
  ordered_json doc;
  doc["schema"] = "credcheck/report";
  doc["format_version"] = 1;
  if (!rows.empty()) {
    doc["positive_class"] = label_name(rows.front().report.matrix.positive_class);
  }
  doc["rows"] = ordered_json::array();
  for (const auto& row : rows) {
    const auto& r = row.report;
    ordered_json j;
    j["label"] = row.label;
    j["n"] = r.n;
    j["confusion"] = {{"tp", r.matrix.tp}, {"tn", r.matrix.tn}, {"fp", r.matrix.fp}, {"fn", r.matrix.fn}};
    j["accuracy"] = r.accuracy;
    j["precision"] = r.precision ? ordered_json(*r.precision) : ordered_json(nullptr);
    j["recall"] = r.recall ? ordered_json(*r.recall) : ordered_json(nullptr);
    j["f1"] = r.f1 ? ordered_json(*r.f1) : ordered_json(nullptr);
    doc["rows"].push_back(std::move(j));
  }
  if (gap) {
    ordered_json g;
    g["accuracy_pp"] = gap->accuracy_pp;
    g["precision_pp"] = gap->precision_pp ? ordered_json(*gap->precision_pp) : ordered_json(nullptr);
    g["recall_pp"] = gap->recall_pp ? ordered_json(*gap->recall_pp) : ordered_json(nullptr);
    g["f1_pp"] = gap->f1_pp ? ordered_json(*gap->f1_pp) : ordered_json(nullptr);
    g["threshold_pp"] = gap->threshold_pp;
    g["overfitting"] = gap->overfitting;
    doc["gap"] = std::move(g);
  } else {
    doc["gap"] = nullptr;
  }
  doc["note"] = metric_definitions_note();
  return doc.dump(2) + "\n";
}

}  // namespace credcheck
