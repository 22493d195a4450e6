#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "convshape/transcript.hpp"

namespace convshape {

// Text normalization policy. Deterministic: same text + config => same token
// stream. Stopword and exclusion matching happens on the lowercased surface
// form, before stemming; anaphora are matched first and are exempt from both
// filtering and stemming; mention tokens (leading mention_prefix) pass through
// opaque.
struct TokenizerConfig {
  bool lowercase = true;
  bool strip_punctuation = true;
  bool stem = true;
  std::set<std::string> stopwords;   // empty => default_stopwords()
  std::set<std::string> exclusions;  // extra terms dropped from counting
  std::string mention_prefix = "@";
  bool use_default_stopwords = true;

  const std::set<std::string>& effective_stopwords() const;
};

// Embedded default list: function words plus contraction fragments plus the
// intensifier adverbs (really, quite, rather).
const std::set<std::string>& default_stopwords();

// The fixed 11-item referring-expression list:
// it, they, them, their, she, he, her, him, his, this, that.
const std::set<std::string>& anaphora_list();

// One term per line; blank lines and leading '#' comments skipped.
std::set<std::string> load_wordlist(const std::string& path);

// One token occurrence, annotated with who coined the token and whether this
// occurrence is a cross-role reuse. The audit trail behind Information and
// Repetition.
struct TokenEvent {
  std::string token;
  int dialogue_freq = 0;   // occurrences of this token within the dialogue
  Role introducer = Role::Assistant;  // role of the chronologically first occurrence
  Role occurrence_role = Role::Assistant;
  int utterance_index = 0;
  bool is_anaphor = false;
  bool is_repetition_across_roles = false;  // introducer != occurrence_role
                                            // and not the first occurrence
};

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config);

// Every surviving token occurrence appears exactly once, in
// (utterance_index, position) order. dialogue_freq is consistent across
// events of the same token.
std::vector<TokenEvent> token_events(const Dialogue& dialogue,
                                     const TokenizerConfig& config);

// Tokens occurring more than once within the dialogue.
std::set<std::string> frequent_tokens(const std::vector<TokenEvent>& events);

}  // namespace convshape
