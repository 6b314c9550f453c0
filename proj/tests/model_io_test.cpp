#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "credcheck/errors.hpp"
#include "credcheck/model_io.hpp"
#include "credcheck/pipeline.hpp"
#include "credcheck/splitmix64.hpp"
#include "test_util.hpp"

using namespace credcheck;
using testutil::TempDir;

namespace {

// A small trained model with irrational weights to stress float round-trips.
ModelFile trained_fixture() {
  Dataset ds;
  SplitMix64 rng(101);
  const char* fake_words[] = {"peke", "scam", "hoax", "bogus", "duda"};
  const char* real_words[] = {"ulat", "report", "batas", "storm", "signal"};
  for (int i = 0; i < 60; ++i) {
    const bool fake = i % 2 == 0;
    std::string text;
    for (int t = 0; t < 8; ++t) {
      text += (fake ? fake_words : real_words)[rng.next() % 5];
      text += std::to_string(rng.next() % 7);
      text += ' ';
    }
    ds.documents.push_back({i, text, fake ? Label::fake : Label::real});
  }
  PipelineConfig cfg;
  cfg.seed = 5;
  return train_pipeline(ds, cfg).model;
}

}  // namespace

TEST_CASE("serialize/parse keeps every stored value bit-exact") {
  const ModelFile model = trained_fixture();
  const std::string bytes = serialize_model(model);
  const ModelFile back = parse_model(bytes);

  CHECK(back.format_version == model.format_version);
  CHECK(back.vocabulary.terms == model.vocabulary.terms);
  CHECK(back.vocabulary.doc_freq == model.vocabulary.doc_freq);
  CHECK(back.vocabulary.n_docs == model.vocabulary.n_docs);
  REQUIRE(back.idf.size() == model.idf.size());
  for (std::size_t i = 0; i < model.idf.size(); ++i) CHECK(back.idf[i] == model.idf[i]);
  for (std::size_t c = 0; c < 2; ++c) {
    CHECK(back.nb.log_prior[c] == model.nb.log_prior[c]);
    REQUIRE(back.nb.log_likelihood[c].size() == model.nb.log_likelihood[c].size());
    for (std::size_t j = 0; j < model.nb.log_likelihood[c].size(); ++j) {
      CHECK(back.nb.log_likelihood[c][j] == model.nb.log_likelihood[c][j]);
    }
  }
  CHECK(back.training_digest == model.training_digest);
  CHECK(back.config.seed == model.config.seed);
  CHECK(back.config.alpha == model.config.alpha);
  CHECK(back.stopwords == model.stopwords);
  CHECK(back.cleanse_rules.size() == model.cleanse_rules.size());

  // serialization is a fixed point
  CHECK(serialize_model(back) == bytes);
}

TEST_CASE("save/load round-trips through the filesystem") {
  TempDir dir;
  const ModelFile model = trained_fixture();
  const std::string path = dir.file("model.json");
  save_model(model, path);
  const ModelFile back = load_model(path);
  CHECK(serialize_model(back) == serialize_model(model));
}

TEST_CASE("loaded models predict exactly like the in-memory model") {
  TempDir dir;
  const ModelFile model = trained_fixture();
  const std::string path = dir.file("model.json");
  save_model(model, path);
  const ModelFile back = load_model(path);

  SplitMix64 rng(131);
  std::vector<std::string> texts;
  const char* words[] = {"peke", "scam", "ulat", "report", "storm", "zebra", "duda"};
  for (int i = 0; i < 1000; ++i) {
    std::string text;
    for (int t = 0, n = 1 + static_cast<int>(rng.next() % 10); t < n; ++t) {
      text += words[rng.next() % 7];
      text += std::to_string(rng.next() % 9);
      text += ' ';
    }
    texts.push_back(text);
  }
  const auto a = predict_pipeline(model, texts);
  const auto b = predict_pipeline(back, texts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(std::abs(a[i].posterior_fake - b[i].posterior_fake) <= 1e-12);
    CHECK(std::abs(a[i].posterior_real - b[i].posterior_real) <= 1e-12);
    CHECK(a[i].oov == b[i].oov);
  }
}

TEST_CASE("model loading rejects junk, wrong versions and inconsistent arrays") {
  TempDir dir;
  const ModelFile model = trained_fixture();

  SUBCASE("missing file") {
    CHECK_THROWS_WITH_AS(load_model(dir.file("absent.json")), doctest::Contains("ModelFormat"),
                         Error);
  }
  SUBCASE("not json") {
    CHECK_THROWS_WITH_AS(parse_model("definitely not json"), doctest::Contains("ModelFormat"),
                         Error);
  }
  SUBCASE("wrong schema") {
    CHECK_THROWS_WITH_AS(parse_model(R"({"schema":"other/thing"})"),
                         doctest::Contains("ModelFormat"), Error);
  }
  SUBCASE("future format_version") {
    std::string bytes = serialize_model(model);
    const std::string needle = "\"format_version\": 1";
    bytes.replace(bytes.find(needle), needle.size(), "\"format_version\": 2");
    CHECK_THROWS_WITH_AS(parse_model(bytes), doctest::Contains("format_version"), Error);
  }
  SUBCASE("idf length mismatch") {
    ModelFile broken = model;
    broken.idf.pop_back();
    CHECK_THROWS_WITH_AS(parse_model(serialize_model(broken)),
                         doctest::Contains("idf length"), Error);
  }
  SUBCASE("likelihood row mismatch") {
    ModelFile broken = model;
    broken.nb.log_likelihood[1].pop_back();
    CHECK_THROWS_WITH_AS(parse_model(serialize_model(broken)),
                         doctest::Contains("log_likelihood"), Error);
  }
}

TEST_CASE("digest reflects the training content") {
  std::vector<PreparedDocument> docs{{0, "some text", {"some", "text"}, Label::real}};
  const std::string a = training_digest(docs);
  CHECK(a.substr(0, 8) == "fnv1a64:");
  CHECK(a.size() == 8 + 16);
  docs[0].text = "other text";
  CHECK(training_digest(docs) != a);
}
