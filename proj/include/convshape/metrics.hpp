#pragma once

#include <string>
#include <vector>

#include "convshape/lexical.hpp"
#include "convshape/tagging.hpp"
#include "convshape/transcript.hpp"

namespace convshape {

struct RoleCounts {
  int assistant = 0;
  int seeker = 0;

  int by(Role role) const { return role == Role::Assistant ? assistant : seeker; }
};

// Utterances per role whose effective tag falls under the question policy.
RoleCounts question_counts(const Dialogue& dialogue, const QuestionPolicy& policy);

// Distinct frequent (dialogue_freq > 1) non-anaphor tokens coined by each role.
RoleCounts information_counts(const std::vector<TokenEvent>& events);

// Distinct frequent tokens coined by the other role and reused by this one,
// plus anaphora occurrences uttered by this role (counted per occurrence).
RoleCounts repetition_counts(const std::vector<TokenEvent>& events);

// Normalized asymmetry (A - S) / (A + S). Range [-1, 1]; positive means
// assistant-dominant; 0 when both sides are zero.
double delta(double value_assistant, double value_seeker);

// Per-role rates, each normalized by the total utterance count of the
// dialogue. flow == repetition - information by construction.
struct RoleMetrics {
  double question = 0;
  double information = 0;
  double repetition = 0;
  double flow = 0;
};

// The 8-number shape of one dialogue plus per-role raw values for audit.
struct ShapeVector {
  std::string dialogue_id;
  std::string dataset;
  int n_utterances = 0;
  bool single_role = false;  // degenerate: only one role present

  RoleMetrics assistant;
  RoleMetrics seeker;

  double avg_question = 0;
  double delta_question = 0;
  double avg_information = 0;
  double delta_information = 0;
  double avg_repetition = 0;
  double delta_repetition = 0;
};

ShapeVector shape(const Dialogue& dialogue, const TokenizerConfig& tokenizer,
                  const QuestionPolicy& policy);

// Field access by export column name (avg_q, delta_q, avg_i, delta_i, avg_r,
// delta_r, flow_A, flow_S, plus the per-role raw columns q_A ... r_S and
// n_utterances). Throws Error on an unknown name.
double shape_field(const ShapeVector& s, const std::string& name);

// The 8 summary fields profiled per dataset, in export order.
const std::vector<std::string>& shape_summary_fields();

}  // namespace convshape
