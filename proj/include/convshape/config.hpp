#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "convshape/diagnostics.hpp"
#include "convshape/lexical.hpp"
#include "convshape/tagging.hpp"

namespace convshape {

// Everything a run needs to be reproduced byte-for-byte. Fully serializable;
// the serialized form is what gets digested into output headers.
struct RunConfig {
  TokenizerConfig tokenizer;
  QuestionPolicy question_policy;
  double balance_band = 0.1;
  DevianceRules deviance_rules;
  HistogramBinning binning;
  std::uint64_t seed = 0;
  std::optional<std::string> stopwords_path;   // replaces the default list
  std::optional<std::string> exclusions_path;  // adds to tokenizer.exclusions

  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
  static RunConfig load(const std::string& path);

  // Resolves stopwords_path / exclusions_path into the tokenizer sets.
  void resolve_wordlists();

  // FNV-1a 64 over the serialized config, as 16 hex digits.
  std::string digest() const;
};

}  // namespace convshape
