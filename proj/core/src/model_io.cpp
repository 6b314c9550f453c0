#include "credcheck/model_io.hpp"

#include <nlohmann/json.hpp>

#include "credcheck/errors.hpp"
#include "credcheck/util.hpp"

namespace credcheck {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_to_json(const PipelineConfig& cfg) {
  ordered_json j;
  j["seed"] = cfg.seed;
  j["test_fraction"] = cfg.test_fraction;
  j["alpha"] = cfg.alpha;
  j["stopword_paths"] = cfg.stopword_paths;
  j["positive_class"] = label_name(cfg.positive_class);
  j["min_token_len"] = cfg.min_token_len;
  j["stratified"] = cfg.stratified;
  j["features"] = feature_mode_name(cfg.features);
  j["min_df"] = cfg.min_df;
  j["max_vocab"] = cfg.max_vocab;
  j["label_column"] = cfg.label_column;
  j["text_column"] = cfg.text_column;
  j["delimiter"] = std::string(1, cfg.delimiter);
  j["cleanse_rules_path"] = cfg.cleanse_rules_path;
  j["gap_threshold_pp"] = cfg.gap_threshold_pp;
  return j;
}

[[noreturn]] void bad_model(const std::string& detail) {
  raise(ErrorCode::ModelFormat, detail);
}

template <typename T>
T get_field(const ordered_json& j, const char* key) {
  if (!j.contains(key)) bad_model(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    bad_model(std::string("field '") + key + "' has the wrong type");
  }
}

PipelineConfig config_from_json(const ordered_json& j) {
  PipelineConfig cfg;
  cfg.seed = get_field<std::uint64_t>(j, "seed");
  cfg.test_fraction = get_field<double>(j, "test_fraction");
  cfg.alpha = get_field<double>(j, "alpha");
  cfg.stopword_paths = get_field<std::vector<std::string>>(j, "stopword_paths");
  const auto positive = parse_label(get_field<std::string>(j, "positive_class"));
  if (!positive) bad_model("positive_class is not 'fake' or 'real'");
  cfg.positive_class = *positive;
  cfg.min_token_len = get_field<int>(j, "min_token_len");
  cfg.stratified = get_field<bool>(j, "stratified");
  cfg.features = parse_feature_mode(get_field<std::string>(j, "features"));
  cfg.min_df = get_field<std::size_t>(j, "min_df");
  cfg.max_vocab = get_field<std::size_t>(j, "max_vocab");
  cfg.label_column = get_field<std::string>(j, "label_column");
  cfg.text_column = get_field<std::string>(j, "text_column");
  const auto delim = get_field<std::string>(j, "delimiter");
  if (delim.size() != 1) bad_model("delimiter must be a single character");
  cfg.delimiter = delim[0];
  cfg.cleanse_rules_path = get_field<std::string>(j, "cleanse_rules_path");
  cfg.gap_threshold_pp = get_field<double>(j, "gap_threshold_pp");
  return cfg;
}

}  // namespace

const char* feature_mode_name(FeatureMode mode) {
  return mode == FeatureMode::tfidf ? "tfidf" : "counts";
}

FeatureMode parse_feature_mode(const std::string& name) {
  if (name == "tfidf") return FeatureMode::tfidf;
  if (name == "counts") return FeatureMode::counts;
  raise(ErrorCode::InvalidConfig, "unknown feature mode '" + name + "'");
}

std::string serialize_model(const ModelFile& model) {
  ordered_json j;
  j["schema"] = "credcheck/model";
  j["format_version"] = model.format_version;
  j["config"] = config_to_json(model.config);
  j["lowercase_first"] = model.lowercase_first;
  j["cleanse_rules"] = ordered_json::array();
  for (const auto& rule : model.cleanse_rules) {
    j["cleanse_rules"].push_back({{"name", rule.name}, {"pattern", rule.pattern}});
  }
  j["stopwords"] = model.stopwords;
  j["vocabulary"] = {{"n_docs", model.vocabulary.n_docs},
                     {"terms", model.vocabulary.terms},
                     {"doc_freq", model.vocabulary.doc_freq}};
  j["idf"] = model.idf;
  j["classes"] = ordered_json::array();
  for (const Label cls : model.nb.classes) j["classes"].push_back(label_name(cls));
  j["log_prior"] = model.nb.log_prior;
  j["log_likelihood"] = model.nb.log_likelihood;
  j["training_digest"] = model.training_digest;
  return j.dump(2) + "\n";
}

ModelFile parse_model(const std::string& content) {
  ordered_json j;
  try {
    j = ordered_json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    bad_model(std::string("not a valid model document: ") + e.what());
  }
  if (get_field<std::string>(j, "schema") != "credcheck/model") {
    bad_model("schema is not 'credcheck/model'");
  }
  ModelFile model;
  model.format_version = get_field<int>(j, "format_version");
  if (model.format_version != ModelFile::current_format_version) {
    bad_model("unsupported format_version " + std::to_string(model.format_version) +
              " (expected " + std::to_string(ModelFile::current_format_version) + ")");
  }
  if (!j.contains("config")) bad_model("missing field 'config'");
  model.config = config_from_json(j.at("config"));
  model.lowercase_first = get_field<bool>(j, "lowercase_first");

  if (!j.contains("cleanse_rules") || !j.at("cleanse_rules").is_array()) {
    bad_model("missing field 'cleanse_rules'");
  }
  for (const auto& rule : j.at("cleanse_rules")) {
    model.cleanse_rules.push_back(
        {get_field<std::string>(rule, "name"), get_field<std::string>(rule, "pattern")});
  }
  model.stopwords = get_field<std::vector<std::string>>(j, "stopwords");

  if (!j.contains("vocabulary")) bad_model("missing field 'vocabulary'");
  const auto& vocab = j.at("vocabulary");
  model.vocabulary.n_docs = get_field<std::size_t>(vocab, "n_docs");
  model.vocabulary.terms = get_field<std::vector<std::string>>(vocab, "terms");
  model.vocabulary.doc_freq = get_field<std::vector<std::uint32_t>>(vocab, "doc_freq");
  model.idf = get_field<std::vector<double>>(j, "idf");

  const auto classes = get_field<std::vector<std::string>>(j, "classes");
  if (classes != std::vector<std::string>{"fake", "real"}) {
    bad_model("classes must be [\"fake\", \"real\"]");
  }
  model.nb.log_prior = get_field<std::vector<double>>(j, "log_prior");
  model.nb.log_likelihood = get_field<std::vector<std::vector<double>>>(j, "log_likelihood");
  model.nb.alpha = model.config.alpha;
  model.nb.vocab_size = model.vocabulary.size();
  model.training_digest = get_field<std::string>(j, "training_digest");

  // cross-field consistency
  if (model.vocabulary.doc_freq.size() != model.vocabulary.terms.size()) {
    bad_model("doc_freq length does not match terms length");
  }
  if (model.idf.size() != model.vocabulary.terms.size()) {
    bad_model("idf length does not match vocabulary size");
  }
  if (model.nb.log_prior.size() != 2) bad_model("log_prior must have 2 entries");
  if (model.nb.log_likelihood.size() != 2) bad_model("log_likelihood must have 2 rows");
  for (const auto& row : model.nb.log_likelihood) {
    if (row.size() != model.vocabulary.terms.size()) {
      bad_model("log_likelihood row length does not match vocabulary size");
    }
  }
  return model;
}

void save_model(const ModelFile& model, const std::string& path) {
  write_file_atomic(path, serialize_model(model));
}

ModelFile load_model(const std::string& path) {
  std::string content;
  try {
    content = read_file(path);
  } catch (const Error& e) {
    bad_model(e.what());
  }
  return parse_model(content);
}

}  // namespace credcheck
