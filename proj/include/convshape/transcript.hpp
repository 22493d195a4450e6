#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "convshape/tags.hpp"

namespace convshape {

// Two-party information-seeking dialogue: the assistant provides, the seeker
// requests. Every utterance carries exactly one of the two roles.
enum class Role { Assistant, Seeker };

const char* role_name(Role role);               // "assistant" / "seeker"
Role role_from_name(const std::string& name);   // throws Error on unknown name
Role other_role(Role role);

struct Utterance {
  int index = 0;  // 0-based position within the dialogue, contiguous
  Role role = Role::Assistant;
  std::string text;
  std::optional<UtteranceTag> tag;  // imported tag, if any

  bool operator==(const Utterance&) const = default;
};

struct Dialogue {
  std::string id;       // unique within corpus
  std::string dataset;  // source label
  std::vector<Utterance> utterances;  // ordered, never empty after ingestion

  bool single_role() const;  // degenerate monologue

  bool operator==(const Dialogue&) const = default;
};

// Field mapping from a heterogeneous line-delimited source onto the canonical
// schema. role_aliases must cover every speaker label in the source.
struct MappingConfig {
  std::string id_field = "dialogue_id";
  std::string role_field = "role";
  std::map<std::string, Role> role_aliases;
  std::string text_field = "text";
  std::optional<std::string> tag_field;
  std::optional<std::string> turn_field;     // explicit 0-based turn index;
                                             // otherwise encounter order
  std::optional<std::string> dataset_field;  // per-record dataset label
  std::string dataset;                       // constant label fallback

  // Maps the canonical schema onto itself; ingest(emit_canonical(D)) == D.
  static MappingConfig identity();
  static MappingConfig from_json(const nlohmann::json& j);
  static MappingConfig load(const std::string& path);
};

// Groups one record per line into dialogues. Utterance order and count are
// preserved exactly. Throws Error naming the line on malformed records,
// unknown speaker labels, duplicate (id, turn) pairs, or non-contiguous
// explicit turn indices.
std::vector<Dialogue> ingest(std::istream& stream, const MappingConfig& config);

// Canonical record per line:
// {"dialogue_id": ..., "dataset": ..., "turn": ..., "role": ..., "text": ..., "tag"?: ...}
void emit_canonical(const std::vector<Dialogue>& dialogues, std::ostream& out);
nlohmann::ordered_json canonical_record(const Dialogue& dialogue, const Utterance& u);

std::vector<Dialogue> read_canonical(std::istream& in);
std::vector<Dialogue> load_canonical(const std::string& path);

}  // namespace convshape
