#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credcheck/preprocess.hpp"

namespace credcheck {

struct Vocabulary {
  std::vector<std::string> terms;        // lexicographic; position == term index
  std::vector<std::uint32_t> doc_freq;   // documents containing the term
  std::size_t n_docs = 0;                // N, training documents

  std::size_t size() const { return terms.size(); }
  std::optional<std::uint32_t> index_of(std::string_view term) const;
};

// idf[t] = ln(N / doc_freq[t]); no smoothing, natural log. idf is 0 exactly
// when a term occurs in every training document.
struct TfidfModel {
  Vocabulary vocab;
  std::vector<double> idf;

  bool fitted() const { return vocab.n_docs > 0; }
};

struct DocumentVector {
  struct Entry {
    std::uint32_t index;
    double weight;
  };
  std::vector<Entry> entries;    // ascending index
  std::size_t token_count = 0;   // all tokens, in- and out-of-vocabulary

  bool empty() const { return entries.empty(); }
};

struct VocabularyOptions {
  std::size_t min_df = 1;     // drop terms with doc_freq below this
  std::size_t max_vocab = 0;  // keep the max_vocab highest-doc_freq terms; 0 = unlimited
};

TfidfModel fit_vocabulary(const std::vector<TokenizedDocument>& train,
                          const VocabularyOptions& options = {});

// Occurrences of term divided by the document's total token count.
double term_frequency(const std::vector<std::string>& tokens, std::string_view term);

// TF(t,d) * idf[t] for every in-vocabulary term of the document.
// Out-of-vocabulary tokens count toward the TF denominator but produce no
// entry; terms with idf == 0 are omitted (downstream scoring treats an absent
// entry and a zero weight identically).
DocumentVector transform(const TfidfModel& model, const TokenizedDocument& doc);

// Raw per-term occurrence counts over the model vocabulary (idf ignored);
// the alternative feature mode offered by the CLI.
DocumentVector count_vector(const TfidfModel& model, const TokenizedDocument& doc);

}  // namespace credcheck
