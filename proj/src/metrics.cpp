#include "convshape/metrics.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "convshape/error.hpp"

namespace convshape {

RoleCounts question_counts(const Dialogue& dialogue, const QuestionPolicy& policy) {
  RoleCounts counts;
  for (const Utterance& u : dialogue.utterances) {
    if (!is_question(u, policy)) continue;
    if (u.role == Role::Assistant) {
      ++counts.assistant;
    } else {
      ++counts.seeker;
    }
  }
  return counts;
}

RoleCounts information_counts(const std::vector<TokenEvent>& events) {
  std::set<std::string> coined_assistant, coined_seeker;
  for (const TokenEvent& e : events) {
    if (e.dialogue_freq <= 1 || e.is_anaphor) continue;
    (e.introducer == Role::Assistant ? coined_assistant : coined_seeker).insert(e.token);
  }
  return {static_cast<int>(coined_assistant.size()),
          static_cast<int>(coined_seeker.size())};
}

RoleCounts repetition_counts(const std::vector<TokenEvent>& events) {
  // Distinct cross-role reuses per role; anaphora add per occurrence and
  // never enter the token channel.
  std::set<std::string> reused_by_assistant, reused_by_seeker;
  RoleCounts anaphora;
  for (const TokenEvent& e : events) {
    if (e.is_anaphor) {
      if (e.occurrence_role == Role::Assistant) {
        ++anaphora.assistant;
      } else {
        ++anaphora.seeker;
      }
      continue;
    }
    if (!e.is_repetition_across_roles || e.dialogue_freq <= 1) continue;
    (e.occurrence_role == Role::Assistant ? reused_by_assistant : reused_by_seeker)
        .insert(e.token);
  }
  return {static_cast<int>(reused_by_assistant.size()) + anaphora.assistant,
          static_cast<int>(reused_by_seeker.size()) + anaphora.seeker};
}

double delta(double value_assistant, double value_seeker) {
  const double total = value_assistant + value_seeker;
  if (total == 0) return 0;  // no dominance signal either way
  return (value_assistant - value_seeker) / total;
}

ShapeVector shape(const Dialogue& dialogue, const TokenizerConfig& tokenizer,
                  const QuestionPolicy& policy) {
  if (dialogue.utterances.empty()) {
    throw Error("dialogue \"" + dialogue.id + "\" has no utterances");
  }
  const double n = static_cast<double>(dialogue.utterances.size());

  const std::vector<TokenEvent> events = token_events(dialogue, tokenizer);
  const RoleCounts questions = question_counts(dialogue, policy);
  const RoleCounts information = information_counts(events);
  const RoleCounts repetition = repetition_counts(events);

  ShapeVector s;
  s.dialogue_id = dialogue.id;
  s.dataset = dialogue.dataset;
  s.n_utterances = static_cast<int>(dialogue.utterances.size());
  s.single_role = dialogue.single_role();

  auto rates = [&](Role role) {
    RoleMetrics m;
    m.question = questions.by(role) / n;
    m.information = information.by(role) / n;
    m.repetition = repetition.by(role) / n;
    m.flow = m.repetition - m.information;
    return m;
  };
  s.assistant = rates(Role::Assistant);
  s.seeker = rates(Role::Seeker);

  s.avg_question = (s.assistant.question + s.seeker.question) / 2;
  s.delta_question = delta(s.assistant.question, s.seeker.question);
  s.avg_information = (s.assistant.information + s.seeker.information) / 2;
  s.delta_information = delta(s.assistant.information, s.seeker.information);
  s.avg_repetition = (s.assistant.repetition + s.seeker.repetition) / 2;
  s.delta_repetition = delta(s.assistant.repetition, s.seeker.repetition);
  return s;
}

double shape_field(const ShapeVector& s, const std::string& name) {
  static const std::map<std::string, double ShapeVector::*> summary = {
      {"avg_q", &ShapeVector::avg_question},
      {"delta_q", &ShapeVector::delta_question},
      {"avg_i", &ShapeVector::avg_information},
      {"delta_i", &ShapeVector::delta_information},
      {"avg_r", &ShapeVector::avg_repetition},
      {"delta_r", &ShapeVector::delta_repetition},
  };
  if (auto it = summary.find(name); it != summary.end()) return s.*(it->second);
  if (name == "flow_A") return s.assistant.flow;
  if (name == "flow_S") return s.seeker.flow;
  if (name == "q_A") return s.assistant.question;
  if (name == "q_S") return s.seeker.question;
  if (name == "i_A") return s.assistant.information;
  if (name == "i_S") return s.seeker.information;
  if (name == "r_A") return s.assistant.repetition;
  if (name == "r_S") return s.seeker.repetition;
  if (name == "n_utterances") return s.n_utterances;
  throw Error("unknown shape field: \"" + name + "\"");
}

const std::vector<std::string>& shape_summary_fields() {
  static const std::vector<std::string> fields = {
      "avg_q", "delta_q", "avg_i", "delta_i",
      "avg_r", "delta_r", "flow_A", "flow_S",
  };
  return fields;
}

}  // namespace convshape
