#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "credcheck/corpus.hpp"
#include "credcheck/tfidf.hpp"

namespace credcheck {

// Multinomial Naive Bayes over sparse document vectors. Vector weights act as
// (possibly fractional) pseudo-counts; alpha is the additive smoothing
// constant. Class order is fixed to [fake, real] and doubles as the tie-break
// order at prediction time.
struct NbModel {
  std::array<Label, 2> classes{Label::fake, Label::real};
  std::vector<double> log_prior;                         // per class
  std::vector<std::vector<double>> feature_weight_sums;  // fit byproduct; empty after load
  std::vector<std::vector<double>> log_likelihood;       // [class][term]
  double alpha = 1.0;
  std::size_t vocab_size = 0;

  bool fitted() const { return !log_prior.empty(); }
  static std::size_t class_index(Label label) { return label == Label::fake ? 0 : 1; }
};

struct Prediction {
  Label label = Label::fake;
  std::array<double, 2> log_joint{};  // aligned with NbModel::classes
  std::array<double, 2> posterior{};
};

// log_prior[c]      = ln(docs_in_class / total_docs)
// log_likelihood[c][j] = ln((S[c][j] + alpha) / (sum_j S[c][j] + alpha * vocab_size))
// where S[c][j] sums the class's vector weights per term, accumulated with
// compensated summation so any permutation of the training documents yields
// the same stored values within 1e-12.
NbModel fit(const std::vector<std::pair<DocumentVector, Label>>& examples,
            std::size_t vocab_size, double alpha = 1.0);

// argmax_c [ log_prior[c] + sum_j v[j] * log_likelihood[c][j] ], ties going to
// the first class in NbModel::classes. An empty vector is valid and reduces
// the decision to the prior.
Prediction predict(const NbModel& model, const DocumentVector& vec);

// Elementwise predict; thread fan-out preserves order and bit-identical output.
std::vector<Prediction> predict_batch(const NbModel& model,
                                      const std::vector<DocumentVector>& vecs,
                                      unsigned n_threads = 1);

}  // namespace credcheck
