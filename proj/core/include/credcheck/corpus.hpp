#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace credcheck {

enum class Label { fake = 0, real = 1 };

// Case-insensitive ("REAL" -> real); nullopt for anything else.
std::optional<Label> parse_label(std::string_view text);
const char* label_name(Label label);

struct LabeledDocument {
  std::int64_t id = 0;  // 0-based data-row order within the source file
  std::string text;
  Label label = Label::fake;
};

struct Dataset {
  std::vector<LabeledDocument> documents;
  std::string provenance;

  std::size_t size() const { return documents.size(); }
  bool empty() const { return documents.empty(); }
};

struct SplitConfig {
  double test_fraction = 0.30;  // must be in (0,1)
  std::uint64_t seed = 20220509;
  bool stratified = true;
};

// Loads one LabeledDocument per data row, in file order. Rows with an empty
// text field or an unparseable label are rejected (EmptyText / BadLabel).
Dataset load_dataset(const std::string& path, const std::string& label_column = "label",
                     const std::string& text_column = "article", char delimiter = ',');

// Text-only loader for prediction inputs; the label column is not required.
std::vector<std::string> load_texts(const std::string& path,
                                    const std::string& text_column = "article",
                                    char delimiter = ',');

struct IndexSplit {
  std::vector<std::size_t> train;  // ascending positions into the input
  std::vector<std::size_t> test;
};

// Deterministic seeded split over label positions. Unstratified: the test
// partition holds round-half-up(test_fraction * n) items. Stratified: each
// class contributes floor(test_fraction * class_count) items to the test
// partition. Shuffle is Fisher-Yates over SplitMix64(seed); under
// stratification the classes are shuffled fake-first from the same stream.
IndexSplit split_indices(const std::vector<Label>& labels, const SplitConfig& cfg);

struct SplitResult {
  Dataset train;
  Dataset test;
};

SplitResult stratified_split(const Dataset& ds, const SplitConfig& cfg);

}  // namespace credcheck
