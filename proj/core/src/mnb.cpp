#include "credcheck/mnb.hpp"

#include <cmath>
#include <mutex>
#include <thread>

#include "credcheck/errors.hpp"

namespace credcheck {
namespace {

struct KahanSum {
  double value = 0.0;
  double compensation = 0.0;

  void add(double x) {
    const double y = x - compensation;
    const double t = value + y;
    compensation = (t - value) - y;
    value = t;
  }
};

}  // namespace

NbModel fit(const std::vector<std::pair<DocumentVector, Label>>& examples,
            std::size_t vocab_size, double alpha) {
  if (!(alpha > 0.0)) raise(ErrorCode::NonPositiveAlpha, "alpha must be > 0");
  if (examples.empty()) raise(ErrorCode::EmptyTrainingSet, "no training vectors");

  NbModel model;
  model.alpha = alpha;
  model.vocab_size = vocab_size;

  std::array<std::size_t, 2> class_counts{0, 0};
  std::array<std::vector<KahanSum>, 2> sums;
  sums[0].resize(vocab_size);
  sums[1].resize(vocab_size);

  for (const auto& [vec, label] : examples) {
    const std::size_t c = NbModel::class_index(label);
    ++class_counts[c];
    for (const auto& entry : vec.entries) {
      if (entry.index >= vocab_size) {
        raise(ErrorCode::Internal, "vector index " + std::to_string(entry.index) +
                                       " outside vocabulary of size " + std::to_string(vocab_size));
      }
      sums[c][entry.index].add(entry.weight);
    }
  }
  if (class_counts[0] == 0 || class_counts[1] == 0) {
    raise(ErrorCode::SingleClass,
          std::string("training set contains no '") +
              label_name(class_counts[0] == 0 ? Label::fake : Label::real) + "' documents");
  }

  const double total = static_cast<double>(examples.size());
  model.log_prior.resize(2);
  model.feature_weight_sums.assign(2, std::vector<double>(vocab_size, 0.0));
  model.log_likelihood.assign(2, std::vector<double>(vocab_size, 0.0));
  for (std::size_t c = 0; c < 2; ++c) {
    model.log_prior[c] = std::log(static_cast<double>(class_counts[c]) / total);
    KahanSum class_total;
    for (std::size_t j = 0; j < vocab_size; ++j) {
      model.feature_weight_sums[c][j] = sums[c][j].value;
      class_total.add(sums[c][j].value);
    }
    const double denom = class_total.value + alpha * static_cast<double>(vocab_size);
    for (std::size_t j = 0; j < vocab_size; ++j) {
      model.log_likelihood[c][j] = std::log((sums[c][j].value + alpha) / denom);
    }
  }
  return model;
}

Prediction predict(const NbModel& model, const DocumentVector& vec) {
  if (!model.fitted()) raise(ErrorCode::UnfittedModel, "predict requires a fitted model");

  Prediction pred;
  for (std::size_t c = 0; c < 2; ++c) {
    double score = model.log_prior[c];
    for (const auto& entry : vec.entries) {
      if (entry.index >= model.vocab_size) {
        raise(ErrorCode::Internal, "vector index " + std::to_string(entry.index) +
                                       " outside vocabulary of size " +
                                       std::to_string(model.vocab_size));
      }
      score += entry.weight * model.log_likelihood[c][entry.index];
    }
    pred.log_joint[c] = score;
  }

  // first class wins ties
  std::size_t best = 0;
  for (std::size_t c = 1; c < 2; ++c) {
    if (pred.log_joint[c] > pred.log_joint[best]) best = c;
  }
  pred.label = model.classes[best];

  const double max_joint = pred.log_joint[best];
  double norm = 0.0;
  for (std::size_t c = 0; c < 2; ++c) norm += std::exp(pred.log_joint[c] - max_joint);
  for (std::size_t c = 0; c < 2; ++c) {
    pred.posterior[c] = std::exp(pred.log_joint[c] - max_joint) / norm;
  }
  return pred;
}

std::vector<Prediction> predict_batch(const NbModel& model,
                                      const std::vector<DocumentVector>& vecs,
                                      unsigned n_threads) {
  std::vector<Prediction> out(vecs.size());
  if (vecs.empty()) return out;
  if (n_threads <= 1 || vecs.size() < 2) {
    for (std::size_t i = 0; i < vecs.size(); ++i) out[i] = predict(model, vecs[i]);
    return out;
  }

  const unsigned workers = std::min<unsigned>(n_threads, static_cast<unsigned>(vecs.size()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < vecs.size(); i += workers) {
          out[i] = predict(model, vecs[i]);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace credcheck
