#include "convshape/profile.hpp"

#include <cmath>
#include <map>

#include "convshape/error.hpp"

namespace convshape {

namespace {

Moments moments_of(const std::vector<ShapeVector>& shapes, const std::string& field) {
  double sum = 0;
  for (const ShapeVector& s : shapes) sum += shape_field(s, field);
  const double mean = sum / static_cast<double>(shapes.size());
  double sq = 0;
  for (const ShapeVector& s : shapes) {
    const double d = shape_field(s, field) - mean;
    sq += d * d;
  }
  return {mean, std::sqrt(sq / static_cast<double>(shapes.size()))};
}

}  // namespace

CorpusProfile profile(const std::vector<ShapeVector>& shapes, const std::string& dataset) {
  if (shapes.empty()) throw Error("profile: empty shape list for \"" + dataset + "\"");
  CorpusProfile p;
  p.dataset = dataset;
  p.n_dialogues = shapes.size();
  p.avg_question = moments_of(shapes, "avg_q");
  p.delta_question = moments_of(shapes, "delta_q");
  p.avg_information = moments_of(shapes, "avg_i");
  p.delta_information = moments_of(shapes, "delta_i");
  p.avg_repetition = moments_of(shapes, "avg_r");
  p.delta_repetition = moments_of(shapes, "delta_r");
  p.flow_assistant = moments_of(shapes, "flow_A");
  p.flow_seeker = moments_of(shapes, "flow_S");
  return p;
}

Moments profile_field(const CorpusProfile& p, const std::string& name) {
  static const std::map<std::string, Moments CorpusProfile::*> fields = {
      {"avg_q", &CorpusProfile::avg_question},
      {"delta_q", &CorpusProfile::delta_question},
      {"avg_i", &CorpusProfile::avg_information},
      {"delta_i", &CorpusProfile::delta_information},
      {"avg_r", &CorpusProfile::avg_repetition},
      {"delta_r", &CorpusProfile::delta_repetition},
      {"flow_A", &CorpusProfile::flow_assistant},
      {"flow_S", &CorpusProfile::flow_seeker},
  };
  auto it = fields.find(name);
  if (it == fields.end()) throw Error("unknown profile field: \"" + name + "\"");
  return p.*(it->second);
}

const char* driver_name(DriverAxis d) {
  switch (d) {
    case DriverAxis::AssistantDriven: return "assistant-driven";
    case DriverAxis::SeekerDriven: return "seeker-driven";
    case DriverAxis::Balanced: return "balanced";
  }
  return "balanced";
}

const char* topic_name(TopicAxis t) {
  switch (t) {
    case TopicAxis::AssistantContributed: return "assistant-contributed";
    case TopicAxis::SeekerContributed: return "seeker-contributed";
    case TopicAxis::Balanced: return "balanced";
  }
  return "balanced";
}

DialogueTypeLabel classify(const CorpusProfile& p, double balance_band,
                           TopicAxisSource topic_source) {
  if (balance_band < 0) throw Error("classify: balance band must be >= 0");
  DialogueTypeLabel label;

  const double dq = p.delta_question.mean;
  if (dq > balance_band) {
    label.driver = DriverAxis::AssistantDriven;
  } else if (dq < -balance_band) {
    label.driver = DriverAxis::SeekerDriven;
  }

  const double dt = topic_source == TopicAxisSource::Information
                        ? p.delta_information.mean
                        : p.delta_repetition.mean;
  if (dt > balance_band) {
    label.topic = TopicAxis::AssistantContributed;
  } else if (dt < -balance_band) {
    label.topic = TopicAxis::SeekerContributed;
  }
  return label;
}

std::vector<ScatterPoint> scatter_points(const std::vector<CorpusProfile>& profiles,
                                         const std::string& x_field,
                                         const std::string& y_field) {
  std::vector<ScatterPoint> points;
  points.reserve(profiles.size());
  for (const CorpusProfile& p : profiles) {
    points.push_back({p.dataset, profile_field(p, x_field).mean,
                      profile_field(p, y_field).mean});
  }
  return points;
}

}  // namespace convshape
