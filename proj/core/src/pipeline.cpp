#include "credcheck/pipeline.hpp"

#include <cstdlib>
#include <filesystem>
#include <unordered_set>

#include "credcheck/errors.hpp"
#include "credcheck/util.hpp"

namespace credcheck {
namespace {

std::string resolve_stopword_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::path(path).is_absolute()) {
    if (const char* dir = std::getenv("CREDCHECK_STOPWORDS_DIR")) {
      const fs::path candidate = fs::path(dir) / path;
      std::error_code ec;
      if (fs::exists(candidate, ec)) return candidate.string();
    }
  }
  return path;
}

}  // namespace

std::vector<std::string> Preprocessor::tokens_of(std::string_view raw_text) const {
  return remove_stopwords(tokenize(rules.apply(raw_text), min_token_len), stopwords);
}

Preprocessor make_preprocessor(const PipelineConfig& cfg) {
  CleanseRules rules = cfg.cleanse_rules_path.empty()
                           ? CleanseRules::builtin()
                           : CleanseRules::load_file(cfg.cleanse_rules_path);
  StopwordSet stopwords = StopwordSet::builtin();
  for (const auto& path : cfg.stopword_paths) {
    stopwords.add_file(resolve_stopword_path(path));
  }
  return {std::move(rules), std::move(stopwords), cfg.min_token_len};
}

Preprocessor preprocessor_from_model(const ModelFile& model) {
  CleanseRules rules(model.cleanse_rules, model.lowercase_first);
  StopwordSet stopwords = StopwordSet::from_words(model.stopwords, "model");
  return {std::move(rules), std::move(stopwords), model.config.min_token_len};
}

TfidfModel tfidf_from_model(const ModelFile& model) {
  TfidfModel tfidf;
  tfidf.vocab = model.vocabulary;
  tfidf.idf = model.idf;
  return tfidf;
}

PreparedCorpus prepare_training_corpus(const Dataset& ds, const Preprocessor& pre) {
  PreparedCorpus corpus;
  corpus.stats.rows_in = ds.size();

  const Dataset no_retweets = filter_retweets(ds);
  corpus.stats.retweets = ds.size() - no_retweets.size();

  std::unordered_set<std::string> seen;
  for (const auto& doc : no_retweets.documents) {
    std::string cleaned = pre.rules.apply(doc.text);
    if (cleaned.empty()) {
      ++corpus.stats.emptied;
      continue;
    }
    if (!seen.insert(cleaned).second) {
      ++corpus.stats.duplicates;
      continue;
    }
    std::vector<std::string> tokens =
        remove_stopwords(tokenize(cleaned, pre.min_token_len), pre.stopwords);
    if (tokens.empty()) {
      ++corpus.stats.untokenized;
      continue;
    }
    corpus.docs.push_back({doc.id, std::move(cleaned), std::move(tokens), doc.label});
  }
  corpus.stats.rows_out = corpus.docs.size();
  return corpus;
}

std::vector<PreparedDocument> prepare_rows(const std::vector<std::string>& texts,
                                           const std::vector<Label>* labels,
                                           const Preprocessor& pre) {
  std::vector<PreparedDocument> docs;
  docs.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    PreparedDocument doc;
    doc.id = static_cast<std::int64_t>(i);
    doc.text = pre.rules.apply(texts[i]);
    doc.tokens = remove_stopwords(tokenize(doc.text, pre.min_token_len), pre.stopwords);
    if (labels) doc.label = (*labels)[i];
    docs.push_back(std::move(doc));
  }
  return docs;
}

CleanOutput clean_corpus(const Dataset& ds, const CleanseRules& rules) {
  CleanOutput out;
  out.stats.rows_in = ds.size();

  const Dataset no_retweets = filter_retweets(ds);
  out.stats.retweets = ds.size() - no_retweets.size();

  std::unordered_set<std::string> seen;
  for (const auto& doc : no_retweets.documents) {
    std::string cleaned = rules.apply(doc.text);
    if (cleaned.empty()) {
      ++out.stats.emptied;
      continue;
    }
    if (!seen.insert(cleaned).second) {
      ++out.stats.duplicates;
      continue;
    }
    out.rows.push_back({label_name(doc.label), std::move(cleaned)});
  }
  out.stats.rows_out = out.rows.size();
  return out;
}

DocumentVector vectorize(const TfidfModel& model, const PreparedDocument& doc, FeatureMode mode) {
  if (doc.tokens.empty()) return DocumentVector{};  // all content was removed; prior-only
  const TokenizedDocument tokenized{doc.id, doc.tokens, doc.label};
  return mode == FeatureMode::tfidf ? transform(model, tokenized) : count_vector(model, tokenized);
}

std::string training_digest(const std::vector<PreparedDocument>& train_docs) {
  Fnv1a64 digest;
  for (const auto& doc : train_docs) {
    digest.update(label_name(doc.label ? *doc.label : Label::fake));
    digest.update('\x1f');
    digest.update(doc.text);
    digest.update('\x1e');
  }
  return "fnv1a64:" + digest.hex();
}

TrainOutput train_pipeline(const Dataset& raw, const PipelineConfig& cfg) {
  if (raw.empty()) raise(ErrorCode::EmptyDataset, "input file has no data rows");

  const Preprocessor pre = make_preprocessor(cfg);
  PreparedCorpus corpus = prepare_training_corpus(raw, pre);
  if (corpus.docs.empty()) {
    raise(ErrorCode::EmptyCorpus, "no documents remain after cleansing");
  }

  std::size_t n_fake = 0;
  std::vector<Label> labels;
  labels.reserve(corpus.docs.size());
  for (const auto& doc : corpus.docs) {
    labels.push_back(*doc.label);
    if (*doc.label == Label::fake) ++n_fake;
  }
  if (n_fake == 0 || n_fake == corpus.docs.size()) {
    raise(ErrorCode::SingleClass,
          std::string("corpus contains only '") +
              label_name(n_fake == 0 ? Label::real : Label::fake) + "' documents");
  }

  const IndexSplit split =
      split_indices(labels, {cfg.test_fraction, cfg.seed, cfg.stratified});

  std::vector<PreparedDocument> train_docs, test_docs;
  train_docs.reserve(split.train.size());
  test_docs.reserve(split.test.size());
  for (const std::size_t i : split.train) train_docs.push_back(corpus.docs[i]);
  for (const std::size_t i : split.test) test_docs.push_back(corpus.docs[i]);

  std::vector<TokenizedDocument> train_tokenized;
  train_tokenized.reserve(train_docs.size());
  for (const auto& doc : train_docs) {
    train_tokenized.push_back({doc.id, doc.tokens, doc.label});
  }
  TfidfModel tfidf = fit_vocabulary(train_tokenized, {cfg.min_df, cfg.max_vocab});

  std::vector<std::pair<DocumentVector, Label>> examples;
  examples.reserve(train_docs.size());
  for (const auto& doc : train_docs) {
    examples.emplace_back(vectorize(tfidf, doc, cfg.features), *doc.label);
  }
  NbModel nb = fit(examples, tfidf.vocab.size(), cfg.alpha);

  TrainOutput out;
  out.prep_stats = corpus.stats;
  out.train_count = train_docs.size();
  out.test_count = test_docs.size();

  std::vector<std::pair<Label, Label>> train_pairs;
  train_pairs.reserve(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    train_pairs.emplace_back(predict(nb, examples[i].first).label, examples[i].second);
  }
  out.train_report = metrics(confusion(train_pairs, cfg.positive_class));

  if (!test_docs.empty()) {
    std::vector<std::pair<Label, Label>> test_pairs;
    test_pairs.reserve(test_docs.size());
    for (const auto& doc : test_docs) {
      test_pairs.emplace_back(predict(nb, vectorize(tfidf, doc, cfg.features)).label, *doc.label);
    }
    out.test_report = metrics(confusion(test_pairs, cfg.positive_class));
    out.gap = gap_report(out.train_report, *out.test_report, cfg.gap_threshold_pp);
  }

  out.model.format_version = ModelFile::current_format_version;
  out.model.config = cfg;
  out.model.lowercase_first = pre.rules.lowercase_first();
  out.model.cleanse_rules = pre.rules.rules();
  out.model.stopwords = pre.stopwords.words_sorted();
  out.model.vocabulary = std::move(tfidf.vocab);
  out.model.idf = std::move(tfidf.idf);
  out.model.nb = std::move(nb);
  out.model.nb.feature_weight_sums.clear();  // not part of the artifact
  out.model.training_digest = training_digest(train_docs);
  return out;
}

EvalOutput evaluate_pipeline(const ModelFile& model, const Dataset& raw,
                             std::optional<Label> positive_override) {
  if (raw.empty()) raise(ErrorCode::EmptyDataset, "input file has no data rows");

  const Preprocessor pre = preprocessor_from_model(model);
  const TfidfModel tfidf = tfidf_from_model(model);

  std::vector<std::string> texts;
  std::vector<Label> labels;
  texts.reserve(raw.size());
  labels.reserve(raw.size());
  for (const auto& doc : raw.documents) {
    texts.push_back(doc.text);
    labels.push_back(doc.label);
  }
  const std::vector<PreparedDocument> docs = prepare_rows(texts, &labels, pre);

  EvalOutput out;
  out.rows = docs.size();
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(docs.size());
  for (const auto& doc : docs) {
    const DocumentVector vec = vectorize(tfidf, doc, model.config.features);
    if (vec.empty()) ++out.oov_rows;
    pairs.emplace_back(predict(model.nb, vec).label, *doc.label);
  }
  out.report = metrics(confusion(pairs, positive_override.value_or(model.config.positive_class)));
  return out;
}

std::vector<PredictionRow> predict_pipeline(const ModelFile& model,
                                            const std::vector<std::string>& texts) {
  const Preprocessor pre = preprocessor_from_model(model);
  const TfidfModel tfidf = tfidf_from_model(model);
  const std::vector<PreparedDocument> docs = prepare_rows(texts, nullptr, pre);

  std::vector<PredictionRow> rows;
  rows.reserve(docs.size());
  for (const auto& doc : docs) {
    const DocumentVector vec = vectorize(tfidf, doc, model.config.features);
    const Prediction pred = predict(model.nb, vec);
    rows.push_back({pred.label, pred.posterior[NbModel::class_index(Label::fake)],
                    pred.posterior[NbModel::class_index(Label::real)], vec.empty()});
  }
  return rows;
}

}  // namespace credcheck
