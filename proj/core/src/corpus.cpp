#include "credcheck/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "credcheck/csv.hpp"
#include "credcheck/errors.hpp"
#include "credcheck/splitmix64.hpp"
#include "credcheck/util.hpp"

namespace credcheck {
namespace {

std::size_t find_column(const std::vector<std::string>& header, const std::string& name,
                        const std::string& path) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  raise(ErrorCode::MissingColumn, "header of '" + path + "' lacks column '" + name + "'");
}

}  // namespace

std::optional<Label> parse_label(std::string_view text) {
  const std::string folded = ascii_lower_copy(trim(text));
  if (folded == "fake") return Label::fake;
  if (folded == "real") return Label::real;
  return std::nullopt;
}

const char* label_name(Label label) {
  return label == Label::fake ? "fake" : "real";
}

Dataset load_dataset(const std::string& path, const std::string& label_column,
                     const std::string& text_column, char delimiter) {
  const CsvTable table = read_csv_file(path, delimiter);
  const std::size_t label_idx = find_column(table.header, label_column, path);
  const std::size_t text_idx = find_column(table.header, text_column, path);

  Dataset ds;
  ds.provenance = path;
  ds.documents.reserve(table.rows.size());
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    const std::string& raw_label = table.rows[row][label_idx];
    const std::string& text = table.rows[row][text_idx];
    if (trim(text).empty()) {
      raise(ErrorCode::EmptyText, "data row " + std::to_string(row) + " has empty text");
    }
    const auto label = parse_label(raw_label);
    if (!label) {
      raise(ErrorCode::BadLabel,
            "data row " + std::to_string(row) + " has unrecognized label '" + raw_label + "'");
    }
    ds.documents.push_back({static_cast<std::int64_t>(row), text, *label});
  }
  return ds;
}

std::vector<std::string> load_texts(const std::string& path, const std::string& text_column,
                                    char delimiter) {
  const CsvTable table = read_csv_file(path, delimiter);
  const std::size_t text_idx = find_column(table.header, text_column, path);
  std::vector<std::string> texts;
  texts.reserve(table.rows.size());
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    const std::string& text = table.rows[row][text_idx];
    if (trim(text).empty()) {
      raise(ErrorCode::EmptyText, "data row " + std::to_string(row) + " has empty text");
    }
    texts.push_back(text);
  }
  return texts;
}

IndexSplit split_indices(const std::vector<Label>& labels, const SplitConfig& cfg) {
  if (!(cfg.test_fraction > 0.0 && cfg.test_fraction < 1.0)) {
    raise(ErrorCode::InvalidConfig, "test_fraction must lie in (0,1)");
  }
  if (labels.empty()) raise(ErrorCode::EmptyDataset, "cannot split an empty dataset");

  SplitMix64 rng(cfg.seed);
  IndexSplit split;

  if (!cfg.stratified) {
    std::vector<std::size_t> order(labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    fisher_yates_shuffle(order, rng);
    const auto k = static_cast<std::size_t>(
        std::floor(cfg.test_fraction * static_cast<double>(labels.size()) + 0.5));
    split.test.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    split.train.assign(order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
  } else {
    for (Label cls : {Label::fake, Label::real}) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == cls) members.push_back(i);
      }
      if (members.empty()) {
        raise(ErrorCode::DegenerateClass,
              std::string("stratified split requested but class '") + label_name(cls) +
                  "' has no documents");
      }
      fisher_yates_shuffle(members, rng);
      const auto k = static_cast<std::size_t>(
          std::floor(cfg.test_fraction * static_cast<double>(members.size())));
      if (k == members.size()) {
        raise(ErrorCode::DegenerateClass,
              std::string("class '") + label_name(cls) + "' would have an empty train partition");
      }
      split.test.insert(split.test.end(), members.begin(),
                        members.begin() + static_cast<std::ptrdiff_t>(k));
      split.train.insert(split.train.end(), members.begin() + static_cast<std::ptrdiff_t>(k),
                         members.end());
    }
  }

  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

SplitResult stratified_split(const Dataset& ds, const SplitConfig& cfg) {
  std::vector<Label> labels;
  labels.reserve(ds.size());
  for (const auto& doc : ds.documents) labels.push_back(doc.label);
  const IndexSplit idx = split_indices(labels, cfg);

  SplitResult result;
  result.train.provenance = ds.provenance;
  result.test.provenance = ds.provenance;
  result.train.documents.reserve(idx.train.size());
  result.test.documents.reserve(idx.test.size());
  for (std::size_t i : idx.train) result.train.documents.push_back(ds.documents[i]);
  for (std::size_t i : idx.test) result.test.documents.push_back(ds.documents[i]);
  return result;
}

}  // namespace credcheck
