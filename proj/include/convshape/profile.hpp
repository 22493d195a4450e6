#pragma once

#include <string>
#include <vector>

#include "convshape/metrics.hpp"

namespace convshape {

struct Moments {
  double mean = 0;
  double stddev = 0;  // population standard deviation
};

// Dataset-level aggregate: mean and std of each shape summary field.
struct CorpusProfile {
  std::string dataset;
  std::size_t n_dialogues = 0;

  Moments avg_question, delta_question;
  Moments avg_information, delta_information;
  Moments avg_repetition, delta_repetition;
  Moments flow_assistant, flow_seeker;
};

// Throws Error on empty input.
CorpusProfile profile(const std::vector<ShapeVector>& shapes,
                      const std::string& dataset);

Moments profile_field(const CorpusProfile& p, const std::string& name);

enum class DriverAxis { AssistantDriven, SeekerDriven, Balanced };
enum class TopicAxis { AssistantContributed, SeekerContributed, Balanced };

struct DialogueTypeLabel {
  DriverAxis driver = DriverAxis::Balanced;
  TopicAxis topic = TopicAxis::Balanced;

  bool operator==(const DialogueTypeLabel&) const = default;
};

const char* driver_name(DriverAxis d);
const char* topic_name(TopicAxis t);

// Which delta feeds the topic axis; Information is the default, Repetition is
// an alternate follow-up view.
enum class TopicAxisSource { Information, Repetition };

// Signs of the mean deltas with a balance band: driver from mean delta_q,
// topic from mean delta_i (or delta_r in the alternate mode).
DialogueTypeLabel classify(const CorpusProfile& p, double balance_band = 0.1,
                           TopicAxisSource topic_source = TopicAxisSource::Information);

struct ScatterPoint {
  std::string label;
  double x = 0;
  double y = 0;
};

// One point per dataset, reading the mean of the requested fields. Throws
// Error on an unknown field name.
std::vector<ScatterPoint> scatter_points(const std::vector<CorpusProfile>& profiles,
                                         const std::string& x_field,
                                         const std::string& y_field);

}  // namespace convshape
