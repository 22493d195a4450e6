#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "convshape/transcript.hpp"

namespace convshape {

// Synthetic corpus generator for tests and demos. Per-dialogue counts are
// fixed (only their placement and role split are random), so corpus-level
// metric means are exact and ratios between two generators are deterministic.
// Dialogues alternate roles, assistant first. Multipliers scale the base
// counts (rounded to nearest) before generation.
struct GeneratorSpec {
  std::string dataset = "synthetic";
  int n_dialogues = 100;
  int utterances_per_dialogue = 8;  // even, so the roles get equal turns
  int questions_per_dialogue = 2;
  int info_tokens_per_dialogue = 4;       // frequent content tokens
  int repetition_events_per_dialogue = 4; // cross-role reuses + anaphora
  int fillers_per_utterance = 2;          // unique one-off tokens
  double question_multiplier = 1.0;
  double information_multiplier = 1.0;
  double repetition_multiplier = 1.0;

  static GeneratorSpec from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
  static GeneratorSpec load(const std::string& path);
};

std::vector<Dialogue> generate_corpus(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace convshape
