#pragma once

#include <array>
#include <string>

namespace convshape {

// The 14 NPS Chat utterance types. Closed set; names below are the canonical
// spellings used in tag files.
enum class UtteranceTag {
  Statement,
  Emotion,
  Greet,
  Bye,
  Accept,
  Reject,
  WhQuestion,
  YnQuestion,
  YAnswer,
  NAnswer,
  Emphasis,
  Continuer,
  Clarify,
  Other,
};

inline constexpr int kTagCount = 14;

const std::array<UtteranceTag, kTagCount>& all_tags();

// Canonical string form ("whQuestion", "Statement", ...).
const char* tag_name(UtteranceTag tag);

// Inverse of tag_name; throws Error on an unknown name.
UtteranceTag tag_from_name(const std::string& name);

}  // namespace convshape
