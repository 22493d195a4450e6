#include "convshape/transcript.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "convshape/error.hpp"

namespace convshape {

const char* role_name(Role role) {
  return role == Role::Assistant ? "assistant" : "seeker";
}

Role role_from_name(const std::string& name) {
  if (name == "assistant") return Role::Assistant;
  if (name == "seeker") return Role::Seeker;
  throw Error("unknown role name: \"" + name + "\"");
}

Role other_role(Role role) {
  return role == Role::Assistant ? Role::Seeker : Role::Assistant;
}

bool Dialogue::single_role() const {
  return std::all_of(utterances.begin(), utterances.end(),
                     [&](const Utterance& u) { return u.role == utterances.front().role; });
}

MappingConfig MappingConfig::identity() {
  MappingConfig config;
  config.role_aliases = {{"assistant", Role::Assistant}, {"seeker", Role::Seeker}};
  config.tag_field = "tag";
  config.turn_field = "turn";
  config.dataset_field = "dataset";
  return config;
}

MappingConfig MappingConfig::from_json(const nlohmann::json& j) {
  MappingConfig config;
  config.id_field = j.value("id_field", config.id_field);
  config.role_field = j.value("role_field", config.role_field);
  config.text_field = j.value("text_field", config.text_field);
  if (j.contains("tag_field")) config.tag_field = j.at("tag_field").get<std::string>();
  if (j.contains("turn_field")) config.turn_field = j.at("turn_field").get<std::string>();
  if (j.contains("dataset_field")) {
    config.dataset_field = j.at("dataset_field").get<std::string>();
  }
  config.dataset = j.value("dataset", config.dataset);
  if (!j.contains("role_aliases") || !j.at("role_aliases").is_object()) {
    throw Error("mapping config needs a role_aliases object");
  }
  for (const auto& [label, role] : j.at("role_aliases").items()) {
    config.role_aliases.emplace(label, role_from_name(role.get<std::string>()));
  }
  return config;
}

MappingConfig MappingConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open mapping config: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("mapping config " + path + ": " + e.what());
  }
  return from_json(j);
}

namespace {

std::string string_field(const nlohmann::json& record, const std::string& key,
                         std::size_t line_no) {
  if (!record.contains(key)) {
    throw Error("line " + std::to_string(line_no) + ": missing field \"" + key + "\"");
  }
  const auto& v = record.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error("line " + std::to_string(line_no) + ": field \"" + key +
              "\" must be a string");
}

}  // namespace

std::vector<Dialogue> ingest(std::istream& stream, const MappingConfig& config) {
  std::vector<Dialogue> dialogues;
  std::unordered_map<std::string, std::size_t> index_of;
  // Explicit turn indices seen so far, for duplicate detection.
  std::unordered_map<std::string, std::vector<long long>> turns_seen;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
    }
    if (!record.is_object()) {
      throw Error("line " + std::to_string(line_no) + ": record must be a JSON object");
    }

    const std::string id = string_field(record, config.id_field, line_no);
    const std::string label = string_field(record, config.role_field, line_no);
    const auto alias = config.role_aliases.find(label);
    if (alias == config.role_aliases.end()) {
      throw Error("line " + std::to_string(line_no) + ": speaker label \"" + label +
                  "\" not covered by role_aliases");
    }

    if (!record.contains(config.text_field)) {
      throw Error("line " + std::to_string(line_no) + ": missing field \"" +
                  config.text_field + "\"");
    }
    const auto& text_value = record.at(config.text_field);
    if (!text_value.is_string()) {
      throw Error("line " + std::to_string(line_no) + ": field \"" +
                  config.text_field + "\" must be a string");
    }

    auto [it, inserted] = index_of.emplace(id, dialogues.size());
    if (inserted) {
      Dialogue d;
      d.id = id;
      d.dataset = config.dataset;
      dialogues.push_back(std::move(d));
    }
    Dialogue& dialogue = dialogues[it->second];

    if (config.dataset_field && record.contains(*config.dataset_field)) {
      dialogue.dataset = record.at(*config.dataset_field).get<std::string>();
    }

    Utterance u;
    u.role = alias->second;
    u.text = text_value.get<std::string>();
    u.index = static_cast<int>(dialogue.utterances.size());

    if (config.turn_field) {
      if (!record.contains(*config.turn_field) ||
          !record.at(*config.turn_field).is_number_integer()) {
        throw Error("line " + std::to_string(line_no) + ": field \"" +
                    *config.turn_field + "\" must be an integer");
      }
      const long long turn = record.at(*config.turn_field).get<long long>();
      auto& seen = turns_seen[id];
      if (std::find(seen.begin(), seen.end(), turn) != seen.end()) {
        throw Error("line " + std::to_string(line_no) + ": duplicate turn " +
                    std::to_string(turn) + " in dialogue \"" + id + "\"");
      }
      seen.push_back(turn);
      // Records arrive in turn order; anything else would silently reorder.
      if (turn != u.index) {
        throw Error("line " + std::to_string(line_no) + ": dialogue \"" + id +
                    "\" expects turn " + std::to_string(u.index) + ", got " +
                    std::to_string(turn));
      }
    }

    if (config.tag_field && record.contains(*config.tag_field) &&
        !record.at(*config.tag_field).is_null()) {
      const std::string tag = record.at(*config.tag_field).get<std::string>();
      if (!tag.empty()) {
        try {
          u.tag = tag_from_name(tag);
        } catch (const Error& e) {
          throw Error("line " + std::to_string(line_no) + ": " + e.what());
        }
      }
    }

    dialogue.utterances.push_back(std::move(u));
  }
  return dialogues;
}

nlohmann::ordered_json canonical_record(const Dialogue& dialogue, const Utterance& u) {
  nlohmann::ordered_json record;
  record["dialogue_id"] = dialogue.id;
  record["dataset"] = dialogue.dataset;
  record["turn"] = u.index;
  record["role"] = role_name(u.role);
  record["text"] = u.text;
  if (u.tag) record["tag"] = tag_name(*u.tag);
  return record;
}

void emit_canonical(const std::vector<Dialogue>& dialogues, std::ostream& out) {
  for (const Dialogue& dialogue : dialogues) {
    for (const Utterance& u : dialogue.utterances) {
      out << canonical_record(dialogue, u).dump() << '\n';
    }
  }
}

std::vector<Dialogue> read_canonical(std::istream& in) {
  return ingest(in, MappingConfig::identity());
}

std::vector<Dialogue> load_canonical(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  return read_canonical(in);
}

}  // namespace convshape
