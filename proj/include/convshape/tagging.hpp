#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "convshape/tags.hpp"
#include "convshape/transcript.hpp"

namespace convshape {

// Which tags count as questions. Default: the two tags the taxonomy itself
// names as questions.
struct QuestionPolicy {
  std::set<UtteranceTag> question_tags{UtteranceTag::WhQuestion,
                                       UtteranceTag::YnQuestion};
};

// Deterministic rule-based tagger, the stand-in for an externally trained
// classifier. whQuestion: leading wh-word, or a wh-word immediately before an
// auxiliary. ynQuestion: trailing "?" or leading auxiliary/modal. Greet/Bye on
// short lexicon matches. Everything else: Statement.
UtteranceTag rule_tag(const std::string& text);

// Imported tag if present, else rule_tag. Total: every utterance gets a tag.
UtteranceTag effective_tag(const Utterance& u);

bool is_question(const Utterance& u, const QuestionPolicy& policy);

// Attaches externally produced tags. One record per line:
// {"dialogue_id": ..., "turn": ..., "tag": ...}
// Throws Error on an unknown (dialogue_id, turn) reference or an invalid tag
// name. Untagged utterances stay untagged and fall back to rule_tag.
std::vector<Dialogue> import_tags(std::vector<Dialogue> dialogues,
                                  std::istream& tag_stream);

}  // namespace convshape
