#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "credcheck/errors.hpp"
#include "credcheck/mnb.hpp"
#include "credcheck/splitmix64.hpp"

using namespace credcheck;
using boost::multiprecision::cpp_int;

namespace {

DocumentVector vec(std::vector<DocumentVector::Entry> entries) {
  DocumentVector v;
  v.entries = std::move(entries);
  v.token_count = v.entries.size();
  return v;
}

// Exact posterior comparison for integer-weight corpora with alpha = 1:
// joint(c) = (n_c / n) * prod_j ((S[c][j] + 1) / (sum_j S[c][j] + V))^{w_j}.
// Returns the argmax label with ties going to fake, computed with integer
// cross-multiplication only.
Label oracle_label(const std::vector<std::vector<int>>& weights, const std::vector<Label>& labels,
                   const std::vector<int>& target) {
  const std::size_t n_terms = target.size();
  std::array<cpp_int, 2> class_count{0, 0};
  std::array<std::vector<cpp_int>, 2> sums;
  sums[0].assign(n_terms, 0);
  sums[1].assign(n_terms, 0);
  for (std::size_t d = 0; d < weights.size(); ++d) {
    const std::size_t c = labels[d] == Label::fake ? 0 : 1;
    ++class_count[c];
    for (std::size_t j = 0; j < n_terms; ++j) sums[c][j] += weights[d][j];
  }
  std::array<cpp_int, 2> numer{1, 1};
  std::array<cpp_int, 2> denom{1, 1};
  for (std::size_t c = 0; c < 2; ++c) {
    cpp_int total = 0;
    for (const auto& s : sums[c]) total += s;
    const cpp_int d = total + static_cast<int>(n_terms);  // alpha = 1
    for (std::size_t j = 0; j < n_terms; ++j) {
      for (int e = 0; e < target[j]; ++e) {
        numer[c] *= sums[c][j] + 1;
        denom[c] *= d;
      }
    }
    numer[c] *= class_count[c];
    // shared prior denominator n cancels in the comparison
  }
  const cpp_int lhs = numer[0] * denom[1];
  const cpp_int rhs = numer[1] * denom[0];
  return lhs >= rhs ? Label::fake : Label::real;  // tie -> fake
}

}  // namespace

TEST_CASE("fit computes priors and smoothed likelihoods") {
  // class real = [{good:1}], class fake = [{bad:1}], vocab = {bad, good}
  const std::uint32_t bad = 0, good = 1;
  const std::vector<std::pair<DocumentVector, Label>> train{
      {vec({{good, 1.0}}), Label::real},
      {vec({{bad, 1.0}}), Label::fake},
  };
  const NbModel model = fit(train, 2, 1.0);
  const std::size_t f = NbModel::class_index(Label::fake);
  const std::size_t r = NbModel::class_index(Label::real);
  CHECK(model.log_prior[f] == doctest::Approx(std::log(0.5)).epsilon(1e-15));
  CHECK(model.log_prior[r] == doctest::Approx(std::log(0.5)).epsilon(1e-15));
  // likelihood(good|real) = (1+1)/(1+2) = 2/3, likelihood(bad|real) = 1/3
  CHECK(model.log_likelihood[r][good] == doctest::Approx(std::log(2.0 / 3.0)).epsilon(1e-15));
  CHECK(model.log_likelihood[r][bad] == doctest::Approx(std::log(1.0 / 3.0)).epsilon(1e-15));
  CHECK(model.log_likelihood[f][bad] == doctest::Approx(std::log(2.0 / 3.0)).epsilon(1e-15));
  CHECK(model.log_likelihood[f][good] == doctest::Approx(std::log(1.0 / 3.0)).epsilon(1e-15));
  CHECK(model.feature_weight_sums[r][good] == 1.0);
  CHECK(model.feature_weight_sums[f][good] == 0.0);
}

TEST_CASE("predict scores the example and normalizes posteriors") {
  const std::uint32_t bad = 0, good = 1;
  const NbModel model = fit(
      {
          {vec({{good, 1.0}}), Label::real},
          {vec({{bad, 1.0}}), Label::fake},
      },
      2, 1.0);
  const Prediction pred = predict(model, vec({{good, 1.0}}));
  CHECK(pred.label == Label::real);
  const std::size_t f = NbModel::class_index(Label::fake);
  const std::size_t r = NbModel::class_index(Label::real);
  CHECK(pred.log_joint[r] == doctest::Approx(std::log(0.5) + std::log(2.0 / 3.0)).epsilon(1e-15));
  CHECK(pred.log_joint[f] == doctest::Approx(std::log(0.5) + std::log(1.0 / 3.0)).epsilon(1e-15));
  CHECK(pred.posterior[r] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(pred.posterior[f] + pred.posterior[r] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symmetric training data decides by tie-break: fake first") {
  const NbModel model = fit(
      {
          {vec({{0, 1.0}, {1, 2.0}}), Label::fake},
          {vec({{0, 1.0}, {1, 2.0}}), Label::real},
      },
      2, 1.0);
  CHECK(model.log_likelihood[0] == model.log_likelihood[1]);
  const Prediction pred = predict(model, vec({{0, 3.0}}));
  CHECK(pred.label == Label::fake);
  CHECK(pred.posterior[0] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("empty vector reduces to the prior") {
  std::vector<std::pair<DocumentVector, Label>> train;
  for (int i = 0; i < 9; ++i) train.push_back({vec({{0, 1.0}}), Label::real});
  train.push_back({vec({{1, 1.0}}), Label::fake});
  const NbModel model = fit(train, 2, 1.0);
  const Prediction pred = predict(model, DocumentVector{});
  CHECK(pred.label == Label::real);
  CHECK(pred.posterior[NbModel::class_index(Label::real)] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(pred.posterior[NbModel::class_index(Label::fake)] == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("fit error paths") {
  CHECK_THROWS_WITH_AS(fit({}, 2, 1.0), doctest::Contains("EmptyTrainingSet"), Error);
  CHECK_THROWS_WITH_AS(fit({{vec({{0, 1.0}}), Label::real}}, 2, 1.0),
                       doctest::Contains("SingleClass"), Error);
  CHECK_THROWS_WITH_AS(fit({{vec({{0, 1.0}}), Label::real}, {vec({{0, 1.0}}), Label::fake}}, 2, 0.0),
                       doctest::Contains("NonPositiveAlpha"), Error);
  CHECK_THROWS_WITH_AS(predict(NbModel{}, DocumentVector{}), doctest::Contains("UnfittedModel"),
                       Error);
}

TEST_CASE("per-class likelihoods sum to one") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t vocab = 1 + rng.next() % 40;
    std::vector<std::pair<DocumentVector, Label>> train;
    const std::size_t docs = 2 + rng.next() % 20;
    for (std::size_t d = 0; d < docs; ++d) {
      std::vector<DocumentVector::Entry> entries;
      for (std::uint32_t j = 0; j < vocab; ++j) {
        if (rng.next() % 3 == 0) {
          entries.push_back({j, static_cast<double>(rng.next() % 1000) / 250.0});
        }
      }
      train.push_back({vec(std::move(entries)), d % 2 == 0 ? Label::fake : Label::real});
    }
    const NbModel model = fit(train, vocab, 1.0);
    for (std::size_t c = 0; c < 2; ++c) {
      double sum = 0.0;
      for (const double ll : model.log_likelihood[c]) sum += std::exp(ll);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
    double prior_sum = std::exp(model.log_prior[0]) + std::exp(model.log_prior[1]);
    CHECK(prior_sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("training order does not move stored values beyond 1e-12") {
  SplitMix64 rng(31);
  const std::size_t vocab = 25;
  std::vector<std::pair<DocumentVector, Label>> train;
  for (std::size_t d = 0; d < 60; ++d) {
    std::vector<DocumentVector::Entry> entries;
    for (std::uint32_t j = 0; j < vocab; ++j) {
      if (rng.next() % 2 == 0) {
        entries.push_back({j, static_cast<double>(rng.next() % 10000) / 1000.0});
      }
    }
    train.push_back({vec(std::move(entries)), d % 3 == 0 ? Label::fake : Label::real});
  }
  const NbModel reference = fit(train, vocab, 1.0);
  for (int perm = 0; perm < 50; ++perm) {
    auto shuffled = train;
    fisher_yates_shuffle(shuffled, rng);
    const NbModel model = fit(shuffled, vocab, 1.0);
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(std::abs(model.log_prior[c] - reference.log_prior[c]) <= 1e-12);
      for (std::size_t j = 0; j < vocab; ++j) {
        CHECK(std::abs(model.log_likelihood[c][j] - reference.log_likelihood[c][j]) <= 1e-12);
        CHECK(std::abs(model.feature_weight_sums[c][j] - reference.feature_weight_sums[c][j]) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("posterior is monotone in a favorable term weight") {
  const NbModel model = fit(
      {
          {vec({{0, 3.0}, {1, 1.0}}), Label::fake},
          {vec({{1, 3.0}, {0, 1.0}}), Label::real},
      },
      2, 1.0);
  const std::size_t f = NbModel::class_index(Label::fake);
  REQUIRE(model.log_likelihood[f][0] > model.log_likelihood[1 - f][0]);
  double previous = -1.0;
  for (double w = 0.0; w <= 5.0; w += 0.25) {
    const Prediction pred = predict(model, vec({{0, w}, {1, 2.0}}));
    CHECK(pred.posterior[f] >= previous);
    previous = pred.posterior[f];
  }
}

TEST_CASE("disjoint class vocabularies classify their own corpus perfectly") {
  SplitMix64 rng(47);
  std::vector<std::pair<DocumentVector, Label>> train;
  for (int d = 0; d < 40; ++d) {
    const bool fake = d % 2 == 0;
    std::vector<DocumentVector::Entry> entries;
    for (std::uint32_t j = 0; j < 5; ++j) {
      const std::uint32_t index = (fake ? 0 : 5) + j;
      if (rng.next() % 2 == 0) entries.push_back({index, 1.0 + static_cast<double>(j)});
    }
    if (entries.empty()) entries.push_back({fake ? 0u : 5u, 1.0});
    train.push_back({vec(std::move(entries)), fake ? Label::fake : Label::real});
  }
  const NbModel model = fit(train, 10, 1.0);
  for (const auto& [v, label] : train) {
    CHECK(predict(model, v).label == label);
  }
}

TEST_CASE("predict_batch equals elementwise predict, any worker count") {
  SplitMix64 rng(59);
  const std::size_t vocab = 30;
  std::vector<std::pair<DocumentVector, Label>> train;
  for (std::size_t d = 0; d < 50; ++d) {
    std::vector<DocumentVector::Entry> entries;
    for (std::uint32_t j = 0; j < vocab; ++j) {
      if (rng.next() % 4 == 0) entries.push_back({j, static_cast<double>(rng.next() % 100) / 10.0});
    }
    train.push_back({vec(std::move(entries)), d % 2 == 0 ? Label::fake : Label::real});
  }
  const NbModel model = fit(train, vocab, 1.0);

  CHECK(predict_batch(model, {}).empty());

  std::vector<DocumentVector> batch;
  for (int i = 0; i < 1000; ++i) {
    std::vector<DocumentVector::Entry> entries;
    for (std::uint32_t j = 0; j < vocab; ++j) {
      if (rng.next() % 5 == 0) entries.push_back({j, static_cast<double>(rng.next() % 40) / 8.0});
    }
    batch.push_back(vec(std::move(entries)));
  }
  const auto sequential = predict_batch(model, batch, 1);
  REQUIRE(sequential.size() == batch.size());
  CHECK(sequential[0].label == predict(model, batch[0]).label);
  const auto parallel = predict_batch(model, batch, 8);
  REQUIRE(parallel.size() == sequential.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    CHECK(parallel[i].label == sequential[i].label);
    CHECK(parallel[i].posterior[0] == sequential[i].posterior[0]);  // bitwise
    CHECK(parallel[i].log_joint[1] == sequential[i].log_joint[1]);
  }
}

TEST_CASE("small-shape exhaustive agreement with the exact no-log oracle") {
  // All corpora: 2 docs x 2 terms and 3 docs x 1 term, weights in {0..3},
  // both classes present; every document of the corpus is predicted. The
  // acceptance suite runs the full budgeted enumeration.
  auto run_shape = [](std::size_t n_docs, std::size_t n_terms) {
    const std::size_t per_doc = 2ull << (2 * n_terms);  // label bit * 4^terms
    std::size_t total = 1;
    for (std::size_t d = 0; d < n_docs; ++d) total *= per_doc;
    std::size_t checked = 0;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      std::vector<std::vector<int>> weights(n_docs, std::vector<int>(n_terms));
      std::vector<Label> labels(n_docs);
      bool has_fake = false, has_real = false;
      for (std::size_t d = 0; d < n_docs; ++d) {
        const std::size_t doc_code = rest % per_doc;
        rest /= per_doc;
        labels[d] = (doc_code & 1) ? Label::real : Label::fake;
        (labels[d] == Label::fake ? has_fake : has_real) = true;
        std::size_t w = doc_code >> 1;
        for (std::size_t j = 0; j < n_terms; ++j) {
          weights[d][j] = static_cast<int>(w & 3);
          w >>= 2;
        }
      }
      if (!has_fake || !has_real) continue;

      std::vector<std::pair<DocumentVector, Label>> train;
      for (std::size_t d = 0; d < n_docs; ++d) {
        std::vector<DocumentVector::Entry> entries;
        for (std::size_t j = 0; j < n_terms; ++j) {
          if (weights[d][j] > 0) {
            entries.push_back({static_cast<std::uint32_t>(j), static_cast<double>(weights[d][j])});
          }
        }
        train.push_back({vec(std::move(entries)), labels[d]});
      }
      const NbModel model = fit(train, n_terms, 1.0);
      for (std::size_t d = 0; d < n_docs; ++d) {
        const Label expected = oracle_label(weights, labels, weights[d]);
        CHECK(predict(model, train[d].first).label == expected);
        ++checked;
      }
    }
    return checked;
  };
  CHECK(run_shape(2, 2) > 0);
  CHECK(run_shape(3, 1) > 0);
}
