#include "convshape/lexical.hpp"

namespace convshape {

// Default English stopword list: the classic function-word core (pronouns,
// auxiliaries, determiners, prepositions, conjunctions, wh-words, negation
// and contraction fragments) extended with the intensifier adverbs, which
// behave as degree markers rather than content in chat transcripts.
const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words = {
      // pronouns and possessives
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
      "your", "yours", "yourself", "yourselves", "he", "him", "his",
      "himself", "she", "her", "hers", "herself", "it", "its", "itself",
      "they", "them", "their", "theirs", "themselves",
      // demonstratives and wh-words
      "what", "which", "who", "whom", "this", "that", "these", "those",
      "when", "where", "why", "how",
      // be / have / do
      "am", "is", "are", "was", "were", "be", "been", "being", "have",
      "has", "had", "having", "do", "does", "did", "doing",
      // articles and conjunctions
      "a", "an", "the", "and", "but", "if", "or", "because", "as", "until",
      "while",
      // prepositions
      "of", "at", "by", "for", "with", "about", "against", "between",
      "into", "through", "during", "before", "after", "above", "below",
      "to", "from", "up", "down", "in", "out", "on", "off", "over",
      "under",
      // adverbs and quantifiers
      "again", "further", "then", "once", "here", "there", "all", "any",
      "both", "each", "few", "more", "most", "other", "some", "such", "no",
      "nor", "not", "only", "own", "same", "so", "than", "too", "very",
      "just", "now",
      // modals and negated auxiliaries
      "can", "will", "should", "don", "ain", "aren", "couldn", "didn",
      "doesn", "hadn", "hasn", "haven", "isn", "ma", "mightn", "mustn",
      "needn", "shan", "shouldn", "wasn", "weren", "won", "wouldn",
      // contraction fragments left by punctuation splitting
      "s", "t", "d", "ll", "m", "o", "re", "ve", "y",
      // intensifiers
      "really", "quite", "rather",
  };
  return words;
}

// Matched after lowercasing, before stemming; exempt from stopword removal.
const std::set<std::string>& anaphora_list() {
  static const std::set<std::string> words = {
      "it", "they", "them", "their", "she", "he",
      "her", "him", "his", "this", "that",
  };
  return words;
}

}  // namespace convshape
