#include "convshape/config.hpp"

#include <fstream>

#include "convshape/error.hpp"
#include "convshape/io.hpp"

namespace convshape {

namespace {

nlohmann::ordered_json tokenizer_to_json(const TokenizerConfig& t) {
  nlohmann::ordered_json j;
  j["lowercase"] = t.lowercase;
  j["strip_punctuation"] = t.strip_punctuation;
  j["stem"] = t.stem;
  j["mention_prefix"] = t.mention_prefix;
  j["use_default_stopwords"] = t.use_default_stopwords;
  j["stopwords"] = t.stopwords;    // sorted by construction
  j["exclusions"] = t.exclusions;
  return j;
}

TokenizerConfig tokenizer_from_json(const nlohmann::json& j) {
  TokenizerConfig t;
  t.lowercase = j.value("lowercase", t.lowercase);
  t.strip_punctuation = j.value("strip_punctuation", t.strip_punctuation);
  t.stem = j.value("stem", t.stem);
  t.mention_prefix = j.value("mention_prefix", t.mention_prefix);
  t.use_default_stopwords = j.value("use_default_stopwords", t.use_default_stopwords);
  if (j.contains("stopwords")) {
    for (const auto& w : j.at("stopwords")) t.stopwords.insert(w.get<std::string>());
  }
  if (j.contains("exclusions")) {
    for (const auto& w : j.at("exclusions")) t.exclusions.insert(w.get<std::string>());
  }
  return t;
}

}  // namespace

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig config;
  if (j.contains("tokenizer")) config.tokenizer = tokenizer_from_json(j.at("tokenizer"));
  if (j.contains("question_policy")) {
    const auto& p = j.at("question_policy");
    if (p.contains("question_tags")) {
      config.question_policy.question_tags.clear();
      for (const auto& name : p.at("question_tags")) {
        config.question_policy.question_tags.insert(tag_from_name(name.get<std::string>()));
      }
      if (config.question_policy.question_tags.empty()) {
        throw Error("question_policy.question_tags must be non-empty");
      }
    }
  }
  config.balance_band = j.value("balance_band", config.balance_band);
  if (j.contains("deviance_rules")) {
    const auto& r = j.at("deviance_rules");
    auto& rules = config.deviance_rules;
    rules.interviewer_question_ratio =
        r.value("interviewer_question_ratio", rules.interviewer_question_ratio);
    rules.talker_information_ratio =
        r.value("talker_information_ratio", rules.talker_information_ratio);
    rules.talker_repetition_ratio =
        r.value("talker_repetition_ratio", rules.talker_repetition_ratio);
    rules.parrot_information_ratio =
        r.value("parrot_information_ratio", rules.parrot_information_ratio);
    rules.parrot_repetition_ratio =
        r.value("parrot_repetition_ratio", rules.parrot_repetition_ratio);
  }
  if (j.contains("binning")) {
    const auto& b = j.at("binning");
    config.binning.bins = b.value("bins", config.binning.bins);
    config.binning.alpha = b.value("alpha", config.binning.alpha);
  }
  config.seed = j.value("seed", config.seed);
  if (j.contains("stopwords_path")) {
    config.stopwords_path = j.at("stopwords_path").get<std::string>();
  }
  if (j.contains("exclusions_path")) {
    config.exclusions_path = j.at("exclusions_path").get<std::string>();
  }
  return config;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["tokenizer"] = tokenizer_to_json(tokenizer);
  {
    nlohmann::ordered_json tags = nlohmann::ordered_json::array();
    for (UtteranceTag tag : question_policy.question_tags) tags.push_back(tag_name(tag));
    j["question_policy"] = {{"question_tags", tags}};
  }
  j["balance_band"] = balance_band;
  j["deviance_rules"] = {
      {"interviewer_question_ratio", deviance_rules.interviewer_question_ratio},
      {"talker_information_ratio", deviance_rules.talker_information_ratio},
      {"talker_repetition_ratio", deviance_rules.talker_repetition_ratio},
      {"parrot_information_ratio", deviance_rules.parrot_information_ratio},
      {"parrot_repetition_ratio", deviance_rules.parrot_repetition_ratio},
  };
  j["binning"] = {{"bins", binning.bins}, {"alpha", binning.alpha}};
  j["seed"] = seed;
  if (stopwords_path) j["stopwords_path"] = *stopwords_path;
  if (exclusions_path) j["exclusions_path"] = *exclusions_path;
  return j;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open run config: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("run config " + path + ": " + e.what());
  }
  return from_json(j);
}

void RunConfig::resolve_wordlists() {
  if (stopwords_path) {
    tokenizer.stopwords = load_wordlist(*stopwords_path);
    tokenizer.use_default_stopwords = false;
  }
  if (exclusions_path) {
    for (std::string term : load_wordlist(*exclusions_path)) {
      tokenizer.exclusions.insert(std::move(term));
    }
  }
}

std::string RunConfig::digest() const {
  return fnv1a_hex(to_json().dump());
}

}  // namespace convshape
