#include "convshape/tagging.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "convshape/error.hpp"

namespace convshape {

namespace {

const std::array<const char*, kTagCount> kTagNames = {
    "Statement", "Emotion", "Greet",     "Bye",       "Accept",
    "Reject",    "whQuestion", "ynQuestion", "yAnswer", "nAnswer",
    "Emphasis",  "Continuer", "Clarify",  "Other",
};

const std::unordered_set<std::string> kWhWords = {
    "what", "which", "who", "whom", "whose", "where", "when", "why", "how"};

const std::unordered_set<std::string> kAuxiliaries = {
    "do", "does", "did", "is",  "are",   "was",  "were", "can",
    "could", "will", "would", "should", "have", "has",  "had"};

const std::unordered_set<std::string> kGreetWords = {
    "hi", "hello", "hey", "howdy", "greetings", "yo", "welcome"};

const std::unordered_set<std::string> kByeWords = {
    "bye", "goodbye", "farewell", "cya", "ciao", "goodnight"};

std::vector<std::string> rule_words(const std::string& text) {
  std::vector<std::string> words;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '\'') {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

bool ends_with_question_mark(const std::string& text) {
  auto last = text.find_last_not_of(" \t\r\n");
  return last != std::string::npos && text[last] == '?';
}

}  // namespace

const std::array<UtteranceTag, kTagCount>& all_tags() {
  static const std::array<UtteranceTag, kTagCount> tags = [] {
    std::array<UtteranceTag, kTagCount> t{};
    for (int i = 0; i < kTagCount; ++i) t[i] = static_cast<UtteranceTag>(i);
    return t;
  }();
  return tags;
}

const char* tag_name(UtteranceTag tag) {
  return kTagNames[static_cast<int>(tag)];
}

UtteranceTag tag_from_name(const std::string& name) {
  for (int i = 0; i < kTagCount; ++i) {
    if (name == kTagNames[i]) return static_cast<UtteranceTag>(i);
  }
  throw Error("invalid utterance tag name: \"" + name + "\"");
}

UtteranceTag rule_tag(const std::string& text) {
  const std::vector<std::string> words = rule_words(text);
  if (words.empty()) return UtteranceTag::Statement;

  if (kWhWords.count(words.front())) return UtteranceTag::WhQuestion;
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (kWhWords.count(words[i]) && kAuxiliaries.count(words[i + 1])) {
      return UtteranceTag::WhQuestion;
    }
  }

  if (ends_with_question_mark(text)) return UtteranceTag::YnQuestion;
  if (kAuxiliaries.count(words.front())) return UtteranceTag::YnQuestion;

  // Short salutations only; a greeting that opens a longer utterance does not
  // mask its content.
  if (words.size() <= 3) {
    const bool all_greet = std::all_of(words.begin(), words.end(), [](const auto& w) {
      return kGreetWords.count(w) > 0;
    });
    if (all_greet) return UtteranceTag::Greet;
    const bool all_bye = std::all_of(words.begin(), words.end(), [](const auto& w) {
      return kByeWords.count(w) > 0 || w == "good" || w == "night" || w == "later";
    });
    if (all_bye && std::any_of(words.begin(), words.end(), [](const auto& w) {
          return kByeWords.count(w) > 0 || w == "later";
        })) {
      return UtteranceTag::Bye;
    }
  }

  return UtteranceTag::Statement;
}

UtteranceTag effective_tag(const Utterance& u) {
  return u.tag ? *u.tag : rule_tag(u.text);
}

bool is_question(const Utterance& u, const QuestionPolicy& policy) {
  return policy.question_tags.count(effective_tag(u)) > 0;
}

std::vector<Dialogue> import_tags(std::vector<Dialogue> dialogues,
                                  std::istream& tag_stream) {
  std::map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < dialogues.size(); ++i) {
    by_id.emplace(dialogues[i].id, i);
  }

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(tag_stream, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error("tag line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
    }
    if (!record.contains("dialogue_id") || !record.contains("turn") ||
        !record.contains("tag")) {
      throw Error("tag line " + std::to_string(line_no) +
                  ": record needs dialogue_id, turn, tag");
    }

    const std::string id = record.at("dialogue_id").get<std::string>();
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw Error("tag line " + std::to_string(line_no) + ": unknown dialogue \"" +
                  id + "\"");
    }
    Dialogue& dialogue = dialogues[it->second];

    const auto& turn_field = record.at("turn");
    if (!turn_field.is_number_integer()) {
      throw Error("tag line " + std::to_string(line_no) + ": turn must be an integer");
    }
    const long long turn = turn_field.get<long long>();
    if (turn < 0 || turn >= static_cast<long long>(dialogue.utterances.size())) {
      throw Error("tag line " + std::to_string(line_no) + ": dialogue \"" + id +
                  "\" has no turn " + std::to_string(turn));
    }

    UtteranceTag tag;
    try {
      tag = tag_from_name(record.at("tag").get<std::string>());
    } catch (const Error& e) {
      throw Error("tag line " + std::to_string(line_no) + ": " + e.what());
    }
    dialogue.utterances[static_cast<std::size_t>(turn)].tag = tag;
  }
  return dialogues;
}

}  // namespace convshape
