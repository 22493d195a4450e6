#include "convshape/synth.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <utility>

#include "convshape/error.hpp"

namespace convshape {

namespace {

// mt19937_64 output is fully specified; bounded draws use plain modulo so
// corpora are byte-identical across platforms (std::uniform_int_distribution
// is implementation-defined).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[bounded(rng, i)]);
  }
}

int scaled(int count, double multiplier, const char* what) {
  const double v = static_cast<double>(count) * multiplier;
  const long long r = std::llround(v);
  if (r < 0) throw Error(std::string("generator: negative ") + what + " after multiplier");
  return static_cast<int>(r);
}

Role turn_role(int turn) { return turn % 2 == 0 ? Role::Assistant : Role::Seeker; }

// Turns of `role` from which a later turn of `repeater` exists.
std::vector<int> coin_candidates(int n, Role role, Role repeater) {
  std::vector<int> turns;
  for (int i = 0; i < n - 1; ++i) {
    if (turn_role(i) != role) continue;
    bool has_later = false;
    for (int j = i + 1; j < n; ++j) {
      if (turn_role(j) == repeater) {
        has_later = true;
        break;
      }
    }
    if (has_later) turns.push_back(i);
  }
  return turns;
}

std::vector<int> later_turns(int n, Role role, int after) {
  std::vector<int> turns;
  for (int j = after + 1; j < n; ++j) {
    if (turn_role(j) == role) turns.push_back(j);
  }
  return turns;
}

}  // namespace

GeneratorSpec GeneratorSpec::from_json(const nlohmann::json& j) {
  GeneratorSpec spec;
  spec.dataset = j.value("dataset", spec.dataset);
  spec.n_dialogues = j.value("n_dialogues", spec.n_dialogues);
  spec.utterances_per_dialogue = j.value("utterances_per_dialogue", spec.utterances_per_dialogue);
  spec.questions_per_dialogue = j.value("questions_per_dialogue", spec.questions_per_dialogue);
  spec.info_tokens_per_dialogue = j.value("info_tokens_per_dialogue", spec.info_tokens_per_dialogue);
  spec.repetition_events_per_dialogue =
      j.value("repetition_events_per_dialogue", spec.repetition_events_per_dialogue);
  spec.fillers_per_utterance = j.value("fillers_per_utterance", spec.fillers_per_utterance);
  spec.question_multiplier = j.value("question_multiplier", spec.question_multiplier);
  spec.information_multiplier = j.value("information_multiplier", spec.information_multiplier);
  spec.repetition_multiplier = j.value("repetition_multiplier", spec.repetition_multiplier);
  return spec;
}

nlohmann::ordered_json GeneratorSpec::to_json() const {
  nlohmann::ordered_json j;
  j["dataset"] = dataset;
  j["n_dialogues"] = n_dialogues;
  j["utterances_per_dialogue"] = utterances_per_dialogue;
  j["questions_per_dialogue"] = questions_per_dialogue;
  j["info_tokens_per_dialogue"] = info_tokens_per_dialogue;
  j["repetition_events_per_dialogue"] = repetition_events_per_dialogue;
  j["fillers_per_utterance"] = fillers_per_utterance;
  j["question_multiplier"] = question_multiplier;
  j["information_multiplier"] = information_multiplier;
  j["repetition_multiplier"] = repetition_multiplier;
  return j;
}

GeneratorSpec GeneratorSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open generator spec: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("generator spec " + path + ": " + e.what());
  }
  return from_json(j);
}

std::vector<Dialogue> generate_corpus(const GeneratorSpec& spec, std::uint64_t seed) {
  const int n = spec.utterances_per_dialogue;
  if (n < 4 || n % 2 != 0) {
    throw Error("generator: utterances_per_dialogue must be even and >= 4");
  }
  if (spec.n_dialogues < 1) throw Error("generator: n_dialogues must be >= 1");
  if (spec.fillers_per_utterance < 0) throw Error("generator: negative fillers_per_utterance");

  const int questions = scaled(spec.questions_per_dialogue, spec.question_multiplier, "question count");
  const int info_tokens = scaled(spec.info_tokens_per_dialogue, spec.information_multiplier, "info token count");
  const int rep_events = scaled(spec.repetition_events_per_dialogue, spec.repetition_multiplier, "repetition count");
  if (questions > n) throw Error("generator: more questions than utterances");

  std::mt19937_64 rng(seed);
  std::vector<Dialogue> corpus;
  corpus.reserve(static_cast<std::size_t>(spec.n_dialogues));

  for (int d = 0; d < spec.n_dialogues; ++d) {
    std::vector<std::vector<std::string>> turn_tokens(static_cast<std::size_t>(n));

    // Question turns: count fixed, placement (and so the role split) random.
    std::vector<int> turn_ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) turn_ids[static_cast<std::size_t>(i)] = i;
    shuffle_vec(turn_ids, rng);
    std::vector<bool> is_question_turn(static_cast<std::size_t>(n), false);
    for (int i = 0; i < questions; ++i) {
      is_question_turn[static_cast<std::size_t>(turn_ids[static_cast<std::size_t>(i)])] = true;
    }

    // Coiner split of the frequent tokens, reuse split of repetition events.
    const int coined_by_a = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(info_tokens) + 1));
    const int coined_by_s = info_tokens - coined_by_a;
    const int rep_by_a = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(rep_events) + 1));
    const int rep_by_s = rep_events - rep_by_a;
    // Cross-role reuses are capped by the other side's coinage; anaphora
    // occurrences make up the remainder, so per-role totals stay exact.
    const int cross_by_s = std::min(rep_by_s, coined_by_a);
    const int cross_by_a = std::min(rep_by_a, coined_by_s);
    const int anaphora_by_a = rep_by_a - cross_by_a;
    const int anaphora_by_s = rep_by_s - cross_by_s;

    int token_id = 0;
    auto place_tokens = [&](Role coiner, int count, int crossed) {
      const Role repeater_other = other_role(coiner);
      for (int t = 0; t < count; ++t) {
        const Role repeater = t < crossed ? repeater_other : coiner;
        const auto coins = coin_candidates(n, coiner, repeater);
        const int coin_turn = coins[bounded(rng, coins.size())];
        const auto reps = later_turns(n, repeater, coin_turn);
        const int rep_turn = reps[bounded(rng, reps.size())];
        const std::string name = "w" + std::to_string(token_id++);
        turn_tokens[static_cast<std::size_t>(coin_turn)].push_back(name);
        turn_tokens[static_cast<std::size_t>(rep_turn)].push_back(name);
      }
    };
    place_tokens(Role::Assistant, coined_by_a, cross_by_s);
    place_tokens(Role::Seeker, coined_by_s, cross_by_a);

    auto place_anaphora = [&](Role role, int count) {
      std::vector<int> turns;
      for (int i = 0; i < n; ++i) {
        if (turn_role(i) == role) turns.push_back(i);
      }
      for (int t = 0; t < count; ++t) {
        turn_tokens[static_cast<std::size_t>(turns[bounded(rng, turns.size())])]
            .push_back("it");
      }
    };
    place_anaphora(Role::Assistant, anaphora_by_a);
    place_anaphora(Role::Seeker, anaphora_by_s);

    Dialogue dialogue;
    dialogue.dataset = spec.dataset;
    {
      std::string id = std::to_string(d);
      id.insert(0, id.size() < 5 ? 5 - id.size() : 0, '0');
      dialogue.id = spec.dataset + "-" + id;
    }
    for (int i = 0; i < n; ++i) {
      auto& tokens = turn_tokens[static_cast<std::size_t>(i)];
      for (int f = 0; f < spec.fillers_per_utterance; ++f) {
        tokens.push_back("f" + std::to_string(i) + "x" + std::to_string(f));
      }
      shuffle_vec(tokens, rng);

      Utterance u;
      u.index = i;
      u.role = turn_role(i);
      for (std::size_t t = 0; t < tokens.size(); ++t) {
        if (t > 0) u.text.push_back(' ');
        u.text += tokens[t];
      }
      if (is_question_turn[static_cast<std::size_t>(i)]) {
        u.text.push_back('?');
        u.tag = UtteranceTag::YnQuestion;
      } else {
        u.tag = UtteranceTag::Statement;
      }
      dialogue.utterances.push_back(std::move(u));
    }
    corpus.push_back(std::move(dialogue));
  }
  return corpus;
}

}  // namespace convshape
