// credcheck CLI: clean / split / train / evaluate / predict over labeled
// news CSV files. Exit codes: 0 ok, 2 input error, 3 degenerate corpus,
// 4 model error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "credcheck/corpus.hpp"
#include "credcheck/csv.hpp"
#include "credcheck/errors.hpp"
#include "credcheck/eval.hpp"
#include "credcheck/model_io.hpp"
#include "credcheck/pipeline.hpp"
#include "credcheck/util.hpp"

namespace {

using namespace credcheck;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyCorpus:
    case ErrorCode::EmptyDocument:
    case ErrorCode::SingleClass:
    case ErrorCode::DegenerateClass:
    case ErrorCode::EmptyTrainingSet:
      return 3;
    case ErrorCode::ModelFormat:
    case ErrorCode::UnfittedModel:
      return 4;
    case ErrorCode::Internal:
      return 1;
    default:
      return 2;  // input/config errors
  }
}

struct CliOptions {
  PipelineConfig cfg;
  std::string positive_class = "fake";
  std::string format = "table";
  std::string delimiter = ",";
  std::string features = "tfidf";
  bool unstratified = false;
  bool positive_class_set = false;

  std::string input;
  std::string output;
  std::string model_path;
  std::string train_out;
  std::string test_out;
  std::string text;
};

void add_shared_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--seed", o.cfg.seed, "split shuffle seed")->capture_default_str();
  cmd->add_option("--test-fraction", o.cfg.test_fraction, "held-out fraction, in (0,1)")
      ->capture_default_str();
  cmd->add_option("--alpha", o.cfg.alpha, "additive smoothing constant")->capture_default_str();
  cmd->add_option("--stopwords", o.cfg.stopword_paths,
                  "extra stopword files unioned onto the built-in lists (comma separated; "
                  "relative paths are tried under $CREDCHECK_STOPWORDS_DIR first)")
      ->delimiter(',');
  cmd->add_option("--positive-class", o.positive_class, "positive class for metrics")
      ->check(CLI::IsMember({"fake", "real"}))
      ->capture_default_str();
  cmd->add_option("--format", o.format, "report output format")
      ->check(CLI::IsMember({"table", "structured"}))
      ->capture_default_str();
  cmd->add_option("--delimiter", o.delimiter, "CSV field delimiter")->capture_default_str();
  cmd->add_option("--min-token-len", o.cfg.min_token_len, "shortest token kept")
      ->capture_default_str();
  cmd->add_option("--cleanse-rules", o.cfg.cleanse_rules_path,
                  "override rule file, one name<TAB>pattern per line");
  cmd->add_option("--label-column", o.cfg.label_column, "label column name")
      ->capture_default_str();
  cmd->add_option("--text-column", o.cfg.text_column, "text column name")->capture_default_str();
}

void add_vocab_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--features", o.features, "feature weights fed to the classifier")
      ->check(CLI::IsMember({"tfidf", "counts"}))
      ->capture_default_str();
  cmd->add_option("--min-df", o.cfg.min_df, "drop terms with document frequency below this")
      ->capture_default_str();
  cmd->add_option("--max-vocab", o.cfg.max_vocab, "keep only this many terms (0 = all)")
      ->capture_default_str();
  cmd->add_option("--gap-threshold", o.cfg.gap_threshold_pp,
                  "accuracy gap (percentage points) that raises the overfitting warning")
      ->capture_default_str();
}

void finalize(CliOptions& o, const CLI::App* cmd) {
  if (o.delimiter.size() != 1) {
    raise(ErrorCode::InvalidConfig, "--delimiter must be a single character");
  }
  o.cfg.delimiter = o.delimiter[0];
  o.cfg.positive_class = *parse_label(o.positive_class);
  o.cfg.features = parse_feature_mode(o.features);
  o.cfg.stratified = !o.unstratified;
  if (o.cfg.min_token_len < 1) {
    raise(ErrorCode::InvalidConfig, "--min-token-len must be at least 1");
  }
  o.positive_class_set = cmd->count("--positive-class") > 0;
}

std::string stats_line(const PrepStats& s) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "rows: %zu -> %zu (%zu retweets, %zu emptied, %zu duplicates)",
                s.rows_in, s.rows_out, s.retweets, s.emptied, s.duplicates);
  std::string line(buf);
  if (s.untokenized > 0) {
    line += ", " + std::to_string(s.untokenized) + " without tokens";
  }
  return line;
}

std::string row_label(const char* kind, double fraction) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s (%.0f%%)", kind, fraction * 100.0);
  return buf;
}

int run_clean(const CliOptions& o) {
  const Dataset ds =
      load_dataset(o.input, o.cfg.label_column, o.cfg.text_column, o.cfg.delimiter);
  const CleanseRules rules = o.cfg.cleanse_rules_path.empty()
                                 ? CleanseRules::builtin()
                                 : CleanseRules::load_file(o.cfg.cleanse_rules_path);
  const CleanOutput out = clean_corpus(ds, rules);
  write_csv_file(o.output, {"label", "article"}, out.rows, o.cfg.delimiter);
  std::cout << stats_line(out.stats) << "\n";
  return 0;
}

int run_split(const CliOptions& o) {
  const Dataset ds =
      load_dataset(o.input, o.cfg.label_column, o.cfg.text_column, o.cfg.delimiter);
  if (ds.empty()) raise(ErrorCode::EmptyDataset, "input file has no data rows");
  const Preprocessor pre = make_preprocessor(o.cfg);
  const PreparedCorpus corpus = prepare_training_corpus(ds, pre);
  if (corpus.docs.empty()) raise(ErrorCode::EmptyCorpus, "no documents remain after cleansing");

  std::vector<Label> labels;
  labels.reserve(corpus.docs.size());
  for (const auto& doc : corpus.docs) labels.push_back(*doc.label);
  const IndexSplit split =
      split_indices(labels, {o.cfg.test_fraction, o.cfg.seed, o.cfg.stratified});

  auto rows_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(idx.size());
    for (const std::size_t i : idx) {
      rows.push_back({label_name(*corpus.docs[i].label), corpus.docs[i].text});
    }
    return rows;
  };
  write_csv_file(o.train_out, {"label", "article"}, rows_of(split.train), o.cfg.delimiter);
  write_csv_file(o.test_out, {"label", "article"}, rows_of(split.test), o.cfg.delimiter);

  std::cout << stats_line(corpus.stats) << "\n";
  std::cout << "split: " << split.train.size() << " train / " << split.test.size() << " test ("
            << (o.cfg.stratified ? "stratified" : "unstratified") << ", test fraction "
            << o.cfg.test_fraction << ", seed " << o.cfg.seed << ")\n";
  return 0;
}

int run_train(const CliOptions& o) {
  const Dataset ds =
      load_dataset(o.input, o.cfg.label_column, o.cfg.text_column, o.cfg.delimiter);
  const TrainOutput out = train_pipeline(ds, o.cfg);
  save_model(out.model, o.model_path);

  std::vector<ReportRow> rows{{row_label("Training", 1.0 - o.cfg.test_fraction), out.train_report}};
  if (out.test_report) {
    rows.push_back({row_label("Test", o.cfg.test_fraction), *out.test_report});
  }
  if (o.format == "structured") {
    std::cout << render_report_json(rows, out.gap);
  } else {
    std::cout << stats_line(out.prep_stats) << "\n";
    std::cout << "split: " << out.train_count << " train / " << out.test_count << " test ("
              << (o.cfg.stratified ? "stratified" : "unstratified") << ", test fraction "
              << o.cfg.test_fraction << ", seed " << o.cfg.seed << ")\n";
    std::cout << "vocabulary: " << out.model.vocabulary.size() << " terms\n";
    std::cout << "model: " << o.model_path << " (" << out.model.training_digest << ")\n\n";
    std::cout << render_report_table(rows, out.gap);
  }
  return 0;
}

int run_evaluate(const CliOptions& o) {
  const ModelFile model = load_model(o.model_path);
  const Dataset ds = load_dataset(o.input, model.config.label_column, model.config.text_column,
                                  model.config.delimiter);
  const std::optional<Label> positive =
      o.positive_class_set ? std::optional<Label>(o.cfg.positive_class) : std::nullopt;
  const EvalOutput out = evaluate_pipeline(model, ds, positive);

  std::vector<ReportRow> rows{{row_label("Test", model.config.test_fraction), out.report}};
  if (o.format == "structured") {
    std::cout << render_report_json(rows, std::nullopt);
  } else {
    std::cout << "rows: " << out.rows;
    if (out.oov_rows > 0) std::cout << " (" << out.oov_rows << " scored from the prior alone)";
    std::cout << "\n\n" << render_report_table(rows, std::nullopt);
  }
  return 0;
}

int run_predict(const CliOptions& o) {
  const ModelFile model = load_model(o.model_path);
  std::vector<std::string> texts;
  if (!o.text.empty()) {
    texts.push_back(o.text);
  } else {
    texts = load_texts(o.input, model.config.text_column, model.config.delimiter);
  }
  const std::vector<PredictionRow> rows = predict_pipeline(model, texts);

  std::string out = csv_line({"label", "posterior_fake", "posterior_real", "oov"});
  char buf[64];
  for (const auto& row : rows) {
    std::vector<std::string> fields;
    fields.emplace_back(label_name(row.label));
    std::snprintf(buf, sizeof(buf), "%.17g", row.posterior_fake);
    fields.emplace_back(buf);
    std::snprintf(buf, sizeof(buf), "%.17g", row.posterior_real);
    fields.emplace_back(buf);
    fields.emplace_back(row.oov ? "1" : "0");
    out += csv_line(fields);
  }
  if (o.output.empty()) {
    std::cout << out;
  } else {
    write_file_atomic(o.output, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions clean_opts, split_opts, train_opts, eval_opts, predict_opts;

  CLI::App app{"news credibility classification toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "credcheck 1.0.0");

  CLI::App* clean_cmd =
      app.add_subcommand("clean", "cleanse a labeled CSV: drop retweets, strip link/hashtag/"
                                  "mention/headline spans, drop emptied rows and duplicates");
  clean_cmd->add_option("-i,--input", clean_opts.input, "labeled CSV file")->required();
  clean_cmd->add_option("-o,--output", clean_opts.output, "cleansed CSV file")->required();
  add_shared_options(clean_cmd, clean_opts);

  CLI::App* split_cmd = app.add_subcommand(
      "split", "cleanse and split a labeled CSV into train/test files (same partition the "
               "train command uses)");
  split_cmd->add_option("-i,--input", split_opts.input, "labeled CSV file")->required();
  split_cmd->add_option("--train-out", split_opts.train_out, "train partition CSV")->required();
  split_cmd->add_option("--test-out", split_opts.test_out, "test partition CSV")->required();
  split_cmd->add_flag("--unstratified", split_opts.unstratified,
                      "draw the test partition from the shuffled corpus without per-class counts");
  add_shared_options(split_cmd, split_opts);

  CLI::App* train_cmd = app.add_subcommand(
      "train", "cleanse, split, fit the TF-IDF vocabulary and the multinomial naive bayes "
               "classifier on the train partition, write the model file, report metrics");
  train_cmd->add_option("-i,--input", train_opts.input, "labeled CSV file")->required();
  train_cmd->add_option("-m,--model", train_opts.model_path, "model file to write")->required();
  train_cmd->add_flag("--unstratified", train_opts.unstratified,
                      "draw the test partition from the shuffled corpus without per-class counts");
  add_vocab_options(train_cmd, train_opts);
  add_shared_options(train_cmd, train_opts);

  CLI::App* eval_cmd = app.add_subcommand(
      "evaluate", "score every row of a labeled CSV with a saved model and report the "
                  "confusion matrix and metrics");
  eval_cmd->add_option("-m,--model", eval_opts.model_path, "model file")->required();
  eval_cmd->add_option("-i,--input", eval_opts.input, "labeled CSV file")->required();
  add_shared_options(eval_cmd, eval_opts);

  CLI::App* predict_cmd = app.add_subcommand(
      "predict", "label unlabeled text; emits label, posteriors and an all-out-of-vocabulary "
                 "marker per row");
  predict_cmd->add_option("-m,--model", predict_opts.model_path, "model file")->required();
  predict_cmd->add_option("-i,--input", predict_opts.input, "CSV file with a text column");
  predict_cmd->add_option("--text", predict_opts.text, "classify a single string instead");
  predict_cmd->add_option("-o,--output", predict_opts.output, "output CSV (default: stdout)");
  add_shared_options(predict_cmd, predict_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*clean_cmd) {
      finalize(clean_opts, clean_cmd);
      return run_clean(clean_opts);
    }
    if (*split_cmd) {
      finalize(split_opts, split_cmd);
      return run_split(split_opts);
    }
    if (*train_cmd) {
      finalize(train_opts, train_cmd);
      return run_train(train_opts);
    }
    if (*eval_cmd) {
      finalize(eval_opts, eval_cmd);
      return run_evaluate(eval_opts);
    }
    if (*predict_cmd) {
      if (predict_opts.text.empty() && predict_opts.input.empty()) {
        raise(ErrorCode::InvalidConfig, "predict needs --input or --text");
      }
      finalize(predict_opts, predict_cmd);
      return run_predict(predict_opts);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
