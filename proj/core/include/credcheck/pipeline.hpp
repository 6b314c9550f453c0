#pragma once

#include <optional>
#include <string>
#include <vector>

#include "credcheck/corpus.hpp"
#include "credcheck/eval.hpp"
#include "credcheck/mnb.hpp"
#include "credcheck/model_io.hpp"
#include "credcheck/preprocess.hpp"
#include "credcheck/tfidf.hpp"

namespace credcheck {

// Cleanse rules + stopwords + tokenizer settings resolved from a config (or
// from a saved model).
struct Preprocessor {
  CleanseRules rules;
  StopwordSet stopwords;
  int min_token_len = 2;

  std::vector<std::string> tokens_of(std::string_view raw_text) const;
};

// Builds from built-ins plus cfg.stopword_paths / cfg.cleanse_rules_path.
// Relative stopword paths are looked up under $CREDCHECK_STOPWORDS_DIR first
// when that variable is set.
Preprocessor make_preprocessor(const PipelineConfig& cfg);
Preprocessor preprocessor_from_model(const ModelFile& model);
TfidfModel tfidf_from_model(const ModelFile& model);

struct PreparedDocument {
  std::int64_t id = 0;
  std::string text;  // cleansed
  std::vector<std::string> tokens;
  std::optional<Label> label;
};

struct PrepStats {
  std::size_t rows_in = 0;
  std::size_t retweets = 0;
  std::size_t emptied = 0;     // cleansing removed all content
  std::size_t duplicates = 0;  // exact duplicate of an earlier cleansed text
  std::size_t untokenized = 0; // no token survived tokenization + stopwords
  std::size_t rows_out = 0;
};

struct PreparedCorpus {
  std::vector<PreparedDocument> docs;
  PrepStats stats;
};

// Training-side preparation: retweet filter -> cleanse -> drop emptied ->
// drop duplicate cleansed texts (keep first) -> tokenize + stopword filter ->
// drop token-empty documents. Idempotent over its own output, so `train` and
// `split` accept raw as well as pre-cleaned files.
PreparedCorpus prepare_training_corpus(const Dataset& ds, const Preprocessor& pre);

// Evaluation/prediction-side preparation: cleanse + tokenize only; every row
// is kept (token-empty rows surface as empty vectors, predicted from the
// prior).
std::vector<PreparedDocument> prepare_rows(const std::vector<std::string>& texts,
                                           const std::vector<Label>* labels,
                                           const Preprocessor& pre);

struct CleanOutput {
  std::vector<std::vector<std::string>> rows;  // {label, article}
  PrepStats stats;
};

// The `clean` command body: retweet filter -> cleanse -> drop emptied ->
// dedup. No tokenization.
CleanOutput clean_corpus(const Dataset& ds, const CleanseRules& rules);

DocumentVector vectorize(const TfidfModel& model, const PreparedDocument& doc, FeatureMode mode);

struct TrainOutput {
  ModelFile model;
  PrepStats prep_stats;
  std::size_t train_count = 0;
  std::size_t test_count = 0;
  MetricsReport train_report;                // self-classification on the train split
  std::optional<MetricsReport> test_report;  // absent when the test split is empty
  std::optional<GapReport> gap;
};

TrainOutput train_pipeline(const Dataset& raw, const PipelineConfig& cfg);

struct EvalOutput {
  MetricsReport report;
  std::size_t rows = 0;
  std::size_t oov_rows = 0;  // rows scored from the prior alone
};

EvalOutput evaluate_pipeline(const ModelFile& model, const Dataset& raw,
                             std::optional<Label> positive_override = std::nullopt);

struct PredictionRow {
  Label label = Label::fake;
  double posterior_fake = 0.0;
  double posterior_real = 0.0;
  bool oov = false;
};

std::vector<PredictionRow> predict_pipeline(const ModelFile& model,
                                            const std::vector<std::string>& texts);

// Digest string stored in the model file: fnv1a64 over "<label>\x1f<text>\x1e"
// per training document, in split order.
std::string training_digest(const std::vector<PreparedDocument>& train_docs);

}  // namespace credcheck
