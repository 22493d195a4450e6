#include "convshape/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convshape/error.hpp"

namespace convshape {

namespace {

constexpr double kRatioSlack = 1e-9;

double field_mean(const std::vector<ShapeVector>& shapes, const std::string& field) {
  double sum = 0;
  for (const ShapeVector& s : shapes) sum += shape_field(s, field);
  return sum / static_cast<double>(shapes.size());
}

}  // namespace

const std::vector<std::string>& diagnostic_fields() {
  static const std::vector<std::string> fields = {
      "avg_q", "delta_q", "avg_i", "delta_i", "avg_r", "delta_r",
  };
  return fields;
}

std::vector<double> reference_edges(const std::vector<ShapeVector>& reference,
                                    const std::string& field, int bins) {
  if (reference.empty()) throw Error("reference_edges: empty reference corpus");
  if (bins < 1) throw Error("reference_edges: need at least 1 bin");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const ShapeVector& s : reference) {
    const double v = shape_field(s, field);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi - lo < 1e-12) {  // point-mass field; give it real width
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(bins);
    edges[i] = lo + t * (hi - lo);
  }
  edges.back() = hi;
  return edges;
}

MetricHistogram histogram(const std::vector<ShapeVector>& shapes,
                          const std::string& field,
                          const std::vector<double>& bin_edges, double alpha) {
  if (shapes.empty()) throw Error("histogram: empty shape list");
  if (bin_edges.size() < 2) throw Error("histogram: need at least 2 bin edges");
  if (!(alpha > 0)) throw Error("histogram: smoothing alpha must be > 0");
  for (std::size_t i = 1; i < bin_edges.size(); ++i) {
    if (!(bin_edges[i] > bin_edges[i - 1])) {
      throw Error("histogram: bin edges must be strictly ascending");
    }
  }

  const std::size_t bins = bin_edges.size() - 1;
  std::vector<double> counts(bins, 0.0);
  for (const ShapeVector& s : shapes) {
    const double v = shape_field(s, field);
    // Clamp out-of-range values into the terminal bins.
    std::size_t b;
    if (v <= bin_edges.front()) {
      b = 0;
    } else if (v >= bin_edges.back()) {
      b = bins - 1;
    } else {
      b = static_cast<std::size_t>(
              std::upper_bound(bin_edges.begin(), bin_edges.end(), v) -
              bin_edges.begin()) - 1;
      b = std::min(b, bins - 1);
    }
    counts[b] += 1.0;
  }

  const double n = static_cast<double>(shapes.size());
  MetricHistogram h;
  h.field = field;
  h.bin_edges = bin_edges;
  h.probabilities.resize(bins);
  const double denom = n + alpha * static_cast<double>(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    h.probabilities[b] = (counts[b] + alpha) / denom;
  }
  return h;
}

double cross_entropy(const MetricHistogram& p_reference, const MetricHistogram& q_model) {
  if (p_reference.bin_edges != q_model.bin_edges) {
    throw Error("cross_entropy: histograms have different binnings");
  }
  if (p_reference.probabilities.size() != q_model.probabilities.size()) {
    throw Error("cross_entropy: histograms have different bin counts");
  }
  double h = 0;
  for (std::size_t b = 0; b < p_reference.probabilities.size(); ++b) {
    h -= p_reference.probabilities[b] * std::log(q_model.probabilities[b]);
  }
  return h;
}

const char* deviance_name(Deviance d) {
  switch (d) {
    case Deviance::Interviewer: return "interviewer";
    case Deviance::Talker: return "talker";
    case Deviance::Parrot: return "parrot";
    case Deviance::Typical: return "typical";
  }
  return "typical";
}

ReferenceSummary summarize_reference(const std::vector<ShapeVector>& reference_shapes,
                                     const HistogramBinning& binning) {
  if (reference_shapes.empty()) throw Error("diagnose: empty reference corpus");
  ReferenceSummary summary;
  summary.n_dialogues = reference_shapes.size();
  summary.binning = binning;
  for (const std::string& field : diagnostic_fields()) {
    const auto edges = reference_edges(reference_shapes, field, binning.bins);
    summary.histograms.push_back(histogram(reference_shapes, field, edges, binning.alpha));
  }
  for (const char* field : {"avg_q", "avg_i", "avg_r"}) {
    summary.field_means[field] = field_mean(reference_shapes, field);
  }
  return summary;
}

DiagnosticReport diagnose(const std::vector<ShapeVector>& model_shapes,
                          const ReferenceSummary& reference, const DevianceRules& rules,
                          const std::string& model_label) {
  if (model_shapes.empty()) throw Error("diagnose: empty model corpus");
  if (reference.histograms.size() != diagnostic_fields().size()) {
    throw Error("diagnose: reference summary does not cover the diagnostic fields");
  }

  DiagnosticReport report;
  report.model = model_label;

  double total = 0;
  for (const MetricHistogram& p : reference.histograms) {
    // Smoothing keeps the model histogram strictly positive even when every
    // model value falls outside the reference range.
    const auto q = histogram(model_shapes, p.field, p.bin_edges, reference.binning.alpha);
    const double h = cross_entropy(p, q);
    report.field_cross_entropy[p.field] = h;
    total += h;
  }
  report.total_score = total / static_cast<double>(reference.histograms.size());

  auto ratio_of = [&](const std::string& field) {
    const auto it = reference.field_means.find(field);
    if (it == reference.field_means.end() || it->second <= 0) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    return field_mean(model_shapes, field) / it->second;
  };
  const double q_ratio = ratio_of("avg_q");
  const double i_ratio = ratio_of("avg_i");
  const double r_ratio = ratio_of("avg_r");
  report.mean_ratios = {{"avg_q", q_ratio}, {"avg_i", i_ratio}, {"avg_r", r_ratio}};

  auto at_least = [](double value, double threshold) {
    return !std::isnan(value) && value >= threshold - kRatioSlack;
  };
  auto at_most = [](double value, double threshold) {
    return !std::isnan(value) && value <= threshold + kRatioSlack;
  };

  // Priority order keeps the label deterministic when several rules fire.
  if (at_least(q_ratio, rules.interviewer_question_ratio)) {
    report.label = Deviance::Interviewer;
  } else if (at_least(i_ratio, rules.talker_information_ratio) &&
             at_most(r_ratio, rules.talker_repetition_ratio)) {
    report.label = Deviance::Talker;
  } else if (at_most(i_ratio, rules.parrot_information_ratio) &&
             at_least(r_ratio, rules.parrot_repetition_ratio)) {
    report.label = Deviance::Parrot;
  } else {
    report.label = Deviance::Typical;
  }
  return report;
}

DiagnosticReport diagnose(const std::vector<ShapeVector>& model_shapes,
                          const std::vector<ShapeVector>& reference_shapes,
                          const DevianceRules& rules, const HistogramBinning& binning,
                          const std::string& model_label) {
  return diagnose(model_shapes, summarize_reference(reference_shapes, binning), rules,
                  model_label);
}

std::vector<DiagnosticReport> rank(std::vector<DiagnosticReport> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const DiagnosticReport& a, const DiagnosticReport& b) {
              if (a.total_score != b.total_score) return a.total_score < b.total_score;
              return a.model < b.model;
            });
  return reports;
}

}  // namespace convshape
