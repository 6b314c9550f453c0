#include "credcheck/preprocess.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "credcheck/errors.hpp"
#include "credcheck/util.hpp"

namespace credcheck {

const char* headline_rule_pattern() {
  return R"(#[fF]act[-\s]?[cC]heck\sby\s?:?\s?(([-a-zA-Z0-9-]*)?(@[a-zA-Z0-9]{4,15})?)\s?:?\s?(FALSE)?([fF]alse)?(MISLEADING)?([Mm]isleading)?(NEEDS CONTEXT)?([Nn]eeds context)?([Nn]o basis)?(NO BASIS)?\s?)";
}

const char* https_link_rule_pattern() {
  return R"(https?://[-a-zA-Z0-9+&@#/%=?~_!:,.;]*)";
}

const char* twitter_link_rule_pattern() {
  return R"(https?://(t.co)?[-a-zA-Z0-9]*\s?)";
}

const char* hashtag_rule_pattern() {
  return R"(#[-!'#$%&'()*+,-./:;<=>?@\[\]_`{}~\w]*)";
}

const char* mention_rule_pattern() {
  return R"(@[-a-zA-Z0-9_]{4,15})";
}

struct CleanseRules::Compiled {
  std::vector<std::regex> regexes;
};

CleanseRules::CleanseRules(std::vector<CleanseRule> rules, bool lowercase_first)
    : rules_(std::move(rules)),
      lowercase_first_(lowercase_first),
      compiled_(std::make_unique<Compiled>()) {
  compiled_->regexes.reserve(rules_.size());
  for (const auto& rule : rules_) {
    try {
      compiled_->regexes.emplace_back(rule.pattern,
                                      std::regex::ECMAScript | std::regex::optimize);
    } catch (const std::regex_error& e) {
      raise(ErrorCode::InvalidPattern,
            "rule '" + rule.name + "' does not compile: " + e.what());
    }
  }
}

CleanseRules::CleanseRules(const CleanseRules& other)
    : CleanseRules(other.rules_, other.lowercase_first_) {}

CleanseRules& CleanseRules::operator=(const CleanseRules& other) {
  if (this != &other) *this = CleanseRules(other.rules_, other.lowercase_first_);
  return *this;
}

CleanseRules::CleanseRules(CleanseRules&&) noexcept = default;
CleanseRules& CleanseRules::operator=(CleanseRules&&) noexcept = default;
CleanseRules::~CleanseRules() = default;

const CleanseRules& CleanseRules::builtin() {
  static const CleanseRules rules{{
      {"headline", headline_rule_pattern()},
      {"https_link", https_link_rule_pattern()},
      {"twitter_link", twitter_link_rule_pattern()},
      {"hashtag", hashtag_rule_pattern()},
      {"mention", mention_rule_pattern()},
  }};
  return rules;
}

CleanseRules CleanseRules::load_file(const std::string& path) {
  const std::string content = read_file(path);
  std::vector<CleanseRule> rules;
  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      raise(ErrorCode::InvalidPattern,
            "line " + std::to_string(line_no) + " of '" + path + "' lacks a name<TAB>pattern split");
    }
    rules.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return CleanseRules(std::move(rules));
}

std::string CleanseRules::apply(std::string_view text) const {
  std::string work = lowercase_first_ ? ascii_lower_copy(text) : std::string(text);
  for (const auto& re : compiled_->regexes) {
    work = std::regex_replace(work, re, " ");
  }
  // collapse whitespace runs, trim
  std::string out;
  out.reserve(work.size());
  bool pending_space = false;
  for (char c : work) {
    if (ascii_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out += c;
    }
  }
  return out;
}

std::string cleanse(std::string_view text, const CleanseRules& rules) {
  return rules.apply(text);
}

Dataset filter_retweets(const Dataset& ds) {
  Dataset out;
  out.provenance = ds.provenance;
  out.documents.reserve(ds.size());
  for (const auto& doc : ds.documents) {
    const std::string head = ascii_lower_copy(trim(doc.text).substr(0, 4));
    if (head == "rt @") continue;
    out.documents.push_back(doc);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view cleaned, int min_token_len) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (static_cast<int>(current.size()) >= min_token_len) tokens.push_back(current);
    current.clear();
  };
  for (char c : cleaned) {
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    if (alnum) {
      current += ascii_lower(c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

StopwordSet StopwordSet::builtin() {
  StopwordSet sw;
  sw.add_lines(builtin_tagalog_stopwords(), "builtin:tagalog");
  sw.add_lines(builtin_english_stopwords(), "builtin:english");
  return sw;
}

StopwordSet StopwordSet::from_words(const std::vector<std::string>& words, std::string source) {
  StopwordSet sw;
  for (const auto& word : words) {
    const auto trimmed = trim(word);
    if (!trimmed.empty()) sw.words_.insert(ascii_lower_copy(trimmed));
  }
  sw.sources_.push_back(std::move(source));
  return sw;
}

void StopwordSet::add_file(const std::string& path) {
  add_lines(read_file(path), path);
}

void StopwordSet::add_lines(std::string_view content, std::string source) {
  std::size_t start = 0;
  while (start <= content.size()) {
    const auto nl = content.find('\n', start);
    std::string_view line =
        content.substr(start, nl == std::string_view::npos ? content.size() - start : nl - start);
    start = (nl == std::string_view::npos) ? content.size() + 1 : nl + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    words_.insert(ascii_lower_copy(line));
  }
  sources_.push_back(std::move(source));
}

bool StopwordSet::contains(std::string_view token) const {
  return words_.find(token) != words_.end();
}

std::vector<std::string> StopwordSet::words_sorted() const {
  std::vector<std::string> out(words_.begin(), words_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordSet& stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (!stopwords.contains(token)) out.push_back(token);
  }
  return out;
}

}  // namespace credcheck
