#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "credcheck/corpus.hpp"
#include "credcheck/mnb.hpp"
#include "credcheck/preprocess.hpp"
#include "credcheck/tfidf.hpp"

namespace credcheck {

enum class FeatureMode { tfidf, counts };

const char* feature_mode_name(FeatureMode mode);
FeatureMode parse_feature_mode(const std::string& name);

// Every knob that affects the trained artifact. The full struct is embedded
// in the model file so an evaluation run can be reproduced from the file
// alone.
struct PipelineConfig {
  std::uint64_t seed = 20220509;
  double test_fraction = 0.30;
  double alpha = 1.0;
  std::vector<std::string> stopword_paths;  // unioned onto the built-in lists
  Label positive_class = Label::fake;
  int min_token_len = 2;
  bool stratified = true;
  FeatureMode features = FeatureMode::tfidf;
  std::size_t min_df = 1;
  std::size_t max_vocab = 0;  // 0 = unlimited
  std::string label_column = "label";
  std::string text_column = "article";
  char delimiter = ',';
  std::string cleanse_rules_path;  // empty = built-in rules
  double gap_threshold_pp = 5.0;
};

// Self-describing single-document model artifact (JSON on disk, versioned).
// Floating-point values are serialized with 17 significant digits, so
// load(save(m)) reproduces every prediction exactly. Beyond the config it
// carries the resolved stopword list and cleanse rules, making evaluation
// independent of any external file.
struct ModelFile {
  static constexpr int current_format_version = 1;

  int format_version = current_format_version;
  PipelineConfig config;
  bool lowercase_first = true;
  std::vector<CleanseRule> cleanse_rules;
  std::vector<std::string> stopwords;  // sorted
  Vocabulary vocabulary;
  std::vector<double> idf;
  NbModel nb;
  std::string training_digest;  // "fnv1a64:<16 hex digits>" over the training split
};

std::string serialize_model(const ModelFile& model);
ModelFile parse_model(const std::string& content);

// Atomic write / strict load; load raises ModelFormat on version or schema
// mismatches.
void save_model(const ModelFile& model, const std::string& path);
ModelFile load_model(const std::string& path);

}  // namespace credcheck
