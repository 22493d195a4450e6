#pragma once

#include <map>
#include <string>
#include <vector>

#include "convshape/metrics.hpp"

namespace convshape {

// Per-metric 1-D distribution over dialogues. Bin edges are fixed from the
// reference corpus; probabilities are add-alpha smoothed so every bin is
// strictly positive and cross-entropy stays finite.
struct MetricHistogram {
  std::string field;
  std::vector<double> bin_edges;       // B+1 ascending
  std::vector<double> probabilities;   // B entries, sum 1 within 1e-9
};

struct HistogramBinning {
  int bins = 20;
  double alpha = 1.0;  // additive smoothing
};

// Out-of-range values are clamped into the terminal bins.
// probabilities[b] = (count_b + alpha) / (N + alpha * B).
// Throws Error on empty input, fewer than 2 edges, non-ascending edges, or
// alpha <= 0.
MetricHistogram histogram(const std::vector<ShapeVector>& shapes,
                          const std::string& field,
                          const std::vector<double>& bin_edges, double alpha);

// Equal-width edges spanning [min, max] of the field over the reference
// corpus; a degenerate range widens to [v - 0.5, v + 0.5].
std::vector<double> reference_edges(const std::vector<ShapeVector>& reference,
                                    const std::string& field, int bins);

// H(p, q) = -sum_b p_b * ln(q_b), in nats. Throws Error when binnings differ.
double cross_entropy(const MetricHistogram& p_reference,
                     const MetricHistogram& q_model);

// Thresholds on corpus-mean ratios (model mean / reference mean). Ratios are
// compared with 1e-9 slack so an exactly-threshold generator is not lost to
// floating point.
struct DevianceRules {
  double interviewer_question_ratio = 3.0;  // avg question rate at least this
  double talker_information_ratio = 1.5;    // information high ...
  double talker_repetition_ratio = 0.67;    // ... and repetition low
  double parrot_information_ratio = 0.67;   // information low ...
  double parrot_repetition_ratio = 1.5;     // ... and repetition high
};

enum class Deviance { Interviewer, Talker, Parrot, Typical };

const char* deviance_name(Deviance d);

struct DiagnosticReport {
  std::string model;
  // Cross-entropy per field over {avg_q, delta_q, avg_i, delta_i, avg_r, delta_r}.
  std::map<std::string, double> field_cross_entropy;
  double total_score = 0;  // unweighted mean of the per-field values, nats
  Deviance label = Deviance::Typical;
  // Supporting ratios (model mean / reference mean) for avg_q, avg_i, avg_r.
  std::map<std::string, double> mean_ratios;
};

// The fields compared distributionally.
const std::vector<std::string>& diagnostic_fields();

// Everything diagnose() needs from the human reference corpus, computed once
// and shareable across models (and persistable between runs).
struct ReferenceSummary {
  std::vector<MetricHistogram> histograms;     // one per diagnostic field
  std::map<std::string, double> field_means;   // avg_q, avg_i, avg_r
  std::size_t n_dialogues = 0;
  HistogramBinning binning;                    // reused for model histograms
};

ReferenceSummary summarize_reference(const std::vector<ShapeVector>& reference_shapes,
                                     const HistogramBinning& binning);

// Rules fire in fixed priority order Interviewer -> Talker -> Parrot; Typical
// when none fires. Throws Error when either corpus is empty.
DiagnosticReport diagnose(const std::vector<ShapeVector>& model_shapes,
                          const ReferenceSummary& reference,
                          const DevianceRules& rules,
                          const std::string& model_label);

DiagnosticReport diagnose(const std::vector<ShapeVector>& model_shapes,
                          const std::vector<ShapeVector>& reference_shapes,
                          const DevianceRules& rules,
                          const HistogramBinning& binning,
                          const std::string& model_label);

// Ascending by total score, ties broken lexicographically by model label.
std::vector<DiagnosticReport> rank(std::vector<DiagnosticReport> reports);

}  // namespace convshape
