#include "credcheck/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "credcheck/errors.hpp"

namespace credcheck {
namespace {

// term -> occurrence count, iterable in lexicographic term order so every
// downstream loop is deterministic.
std::map<std::string_view, std::size_t> count_terms(const std::vector<std::string>& tokens) {
  std::map<std::string_view, std::size_t> counts;
  for (const auto& token : tokens) ++counts[token];
  return counts;
}

}  // namespace

std::optional<std::uint32_t> Vocabulary::index_of(std::string_view term) const {
  const auto it = std::lower_bound(terms.begin(), terms.end(), term);
  if (it == terms.end() || *it != term) return std::nullopt;
  return static_cast<std::uint32_t>(it - terms.begin());
}

TfidfModel fit_vocabulary(const std::vector<TokenizedDocument>& train,
                          const VocabularyOptions& options) {
  if (train.empty()) raise(ErrorCode::EmptyCorpus, "no training documents");

  std::map<std::string, std::uint32_t> doc_freq;
  for (const auto& doc : train) {
    if (doc.tokens.empty()) {
      raise(ErrorCode::EmptyDocument, "training document " + std::to_string(doc.id) + " has no tokens");
    }
    for (const auto& [term, count] : count_terms(doc.tokens)) {
      (void)count;
      ++doc_freq[std::string(term)];
    }
  }

  // optional pruning: min_df filter, then max_vocab by descending doc_freq
  // (ties broken lexicographically); indices stay lexicographic afterwards
  std::vector<std::pair<std::string, std::uint32_t>> kept;
  kept.reserve(doc_freq.size());
  for (auto& [term, df] : doc_freq) {
    if (df >= options.min_df) kept.emplace_back(term, df);
  }
  if (options.max_vocab > 0 && kept.size() > options.max_vocab) {
    std::stable_sort(kept.begin(), kept.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    kept.resize(options.max_vocab);
    std::sort(kept.begin(), kept.end());
  }

  TfidfModel model;
  model.vocab.n_docs = train.size();
  model.vocab.terms.reserve(kept.size());
  model.vocab.doc_freq.reserve(kept.size());
  for (auto& [term, df] : kept) {
    model.vocab.terms.push_back(std::move(term));
    model.vocab.doc_freq.push_back(df);
  }
  model.idf.reserve(model.vocab.size());
  for (const std::uint32_t df : model.vocab.doc_freq) {
    model.idf.push_back(std::log(static_cast<double>(model.vocab.n_docs) / df));
  }
  return model;
}

double term_frequency(const std::vector<std::string>& tokens, std::string_view term) {
  if (tokens.empty()) raise(ErrorCode::EmptyDocument, "term_frequency of an empty document");
  std::size_t freq = 0;
  for (const auto& token : tokens) {
    if (token == term) ++freq;
  }
  return static_cast<double>(freq) / static_cast<double>(tokens.size());
}

DocumentVector transform(const TfidfModel& model, const TokenizedDocument& doc) {
  if (!model.fitted()) raise(ErrorCode::UnfittedModel, "transform requires a fitted model");
  if (doc.tokens.empty()) {
    raise(ErrorCode::EmptyDocument, "document " + std::to_string(doc.id) + " has no tokens");
  }

  DocumentVector vec;
  vec.token_count = doc.tokens.size();
  const double total = static_cast<double>(doc.tokens.size());
  for (const auto& [term, freq] : count_terms(doc.tokens)) {
    const auto index = model.vocab.index_of(term);
    if (!index) continue;
    const double idf = model.idf[*index];
    if (idf == 0.0) continue;
    vec.entries.push_back({*index, (static_cast<double>(freq) / total) * idf});
  }
  std::sort(vec.entries.begin(), vec.entries.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return vec;
}

DocumentVector count_vector(const TfidfModel& model, const TokenizedDocument& doc) {
  if (!model.fitted()) raise(ErrorCode::UnfittedModel, "count_vector requires a fitted model");
  if (doc.tokens.empty()) {
    raise(ErrorCode::EmptyDocument, "document " + std::to_string(doc.id) + " has no tokens");
  }
  DocumentVector vec;
  vec.token_count = doc.tokens.size();
  for (const auto& [term, freq] : count_terms(doc.tokens)) {
    const auto index = model.vocab.index_of(term);
    if (!index) continue;
    vec.entries.push_back({*index, static_cast<double>(freq)});
  }
  std::sort(vec.entries.begin(), vec.entries.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return vec;
}

}  // namespace credcheck
