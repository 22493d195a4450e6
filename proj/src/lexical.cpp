#include "convshape/lexical.hpp"

#include <cctype>
#include <fstream>
#include <unordered_map>

#include "convshape/error.hpp"

namespace convshape {

const std::set<std::string>& TokenizerConfig::effective_stopwords() const {
  if (!use_default_stopwords || !stopwords.empty()) return stopwords;
  return default_stopwords();
}

std::set<std::string> load_wordlist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open word list: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    words.insert(line);
  }
  return words;
}

namespace {

bool is_token_char(unsigned char c) {
  // Bytes >= 0x80 are UTF-8 continuations/starts; keep multibyte words whole.
  return std::isalnum(c) || c >= 0x80;
}

// Light plural stripper: drops one trailing "s" from longer tokens, keeping
// -ss/-us/-is endings intact (maps movies -> movie, dramas -> drama).
void stem_in_place(std::string& token) {
  const std::size_t n = token.size();
  if (n < 4 || token[n - 1] != 's') return;
  const char prev = token[n - 2];
  if (prev == 's' || prev == 'u' || prev == 'i') return;
  token.pop_back();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config) {
  const std::set<std::string>& stopwords = config.effective_stopwords();
  const std::set<std::string>& anaphora = anaphora_list();

  // Split on whitespace first so mention tokens survive punctuation handling.
  std::vector<std::string> raw;
  std::string current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) {
      if (!current.empty()) {
        raw.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(config.lowercase ? static_cast<char>(std::tolower(c))
                                         : ch);
    }
  }
  if (!current.empty()) raw.push_back(std::move(current));

  const std::string& mention = config.mention_prefix;

  std::vector<std::string> tokens;
  auto emit = [&](std::string token) {
    if (token.empty()) return;
    if (anaphora.count(token)) {  // exempt from filtering and stemming
      tokens.push_back(std::move(token));
      return;
    }
    if (stopwords.count(token) || config.exclusions.count(token)) return;
    if (config.stem) stem_in_place(token);
    tokens.push_back(std::move(token));
  };

  for (std::string& word : raw) {
    if (!mention.empty() && word.size() > mention.size() &&
        word.compare(0, mention.size(), mention) == 0) {
      // Opaque single token; strip only trailing sentence punctuation.
      while (word.size() > mention.size() &&
             std::ispunct(static_cast<unsigned char>(word.back())) ) {
        word.pop_back();
      }
      if (word.size() > mention.size()) tokens.push_back(std::move(word));
      continue;
    }
    if (!config.strip_punctuation) {
      emit(std::move(word));
      continue;
    }
    std::string piece;
    for (char ch : word) {
      if (is_token_char(static_cast<unsigned char>(ch))) {
        piece.push_back(ch);
      } else if (!piece.empty()) {
        emit(std::move(piece));
        piece.clear();
      }
    }
    emit(std::move(piece));
  }
  return tokens;
}

std::vector<TokenEvent> token_events(const Dialogue& dialogue,
                                     const TokenizerConfig& config) {
  struct Occurrence {
    std::string token;
    Role role;
    int utterance_index;
  };
  std::vector<Occurrence> occurrences;
  for (const Utterance& u : dialogue.utterances) {
    for (std::string& token : tokenize(u.text, config)) {
      occurrences.push_back({std::move(token), u.role, u.index});
    }
  }

  struct TokenInfo {
    int freq = 0;
    Role introducer = Role::Assistant;
    bool seen = false;
  };
  std::unordered_map<std::string, TokenInfo> info;
  for (const Occurrence& occ : occurrences) {
    TokenInfo& t = info[occ.token];
    ++t.freq;
    if (!t.seen) {
      t.seen = true;
      t.introducer = occ.role;  // occurrences are totally ordered, no ties
    }
  }

  const std::set<std::string>& anaphora = anaphora_list();
  std::vector<TokenEvent> events;
  events.reserve(occurrences.size());
  std::unordered_map<std::string, bool> first_emitted;
  for (const Occurrence& occ : occurrences) {
    const TokenInfo& t = info[occ.token];
    TokenEvent e;
    e.dialogue_freq = t.freq;
    e.introducer = t.introducer;
    e.occurrence_role = occ.role;
    e.utterance_index = occ.utterance_index;
    e.is_anaphor = anaphora.count(occ.token) > 0;
    bool& emitted = first_emitted[occ.token];
    e.is_repetition_across_roles = emitted && occ.role != t.introducer;
    emitted = true;
    e.token = occ.token;
    events.push_back(std::move(e));
  }
  return events;
}

std::set<std::string> frequent_tokens(const std::vector<TokenEvent>& events) {
  std::set<std::string> result;
  for (const TokenEvent& e : events) {
    if (e.dialogue_freq > 1) result.insert(e.token);
  }
  return result;
}

}  // namespace convshape
