#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "convshape/diagnostics.hpp"
#include "convshape/metrics.hpp"
#include "convshape/profile.hpp"

namespace convshape {

enum class ReportFormat { Csv, Json, Markdown };

ReportFormat format_from_name(const std::string& name);  // csv | json | md

// Per-dialogue shape export. Columns, in order:
// dialogue_id,dataset,n_utterances,q_A,q_S,avg_q,delta_q,i_A,i_S,avg_i,
// delta_i,r_A,r_S,avg_r,delta_r,flow_A,flow_S
// The header comment line carries the config digest.
void write_shapes_csv(std::ostream& out, const std::vector<ShapeVector>& shapes,
                      const std::string& config_digest);
void write_shapes_jsonl(std::ostream& out, const std::vector<ShapeVector>& shapes,
                        const std::string& config_digest);
nlohmann::ordered_json shape_to_json(const ShapeVector& s);

// Reads back a shape CSV (comment lines skipped). Used by the profile command.
std::vector<ShapeVector> read_shapes_csv(std::istream& in);

// Dataset comparison table, one row per profile, "mean (std)" cells at two
// decimals. Markdown bold-faces each column's highest mean.
void write_profile_table_csv(std::ostream& out, const std::vector<CorpusProfile>& profiles,
                             const std::string& config_digest);
void write_profile_table_markdown(std::ostream& out, const std::vector<CorpusProfile>& profiles,
                                  double balance_band, const std::string& config_digest);
nlohmann::ordered_json profiles_to_json(const std::vector<CorpusProfile>& profiles,
                                        double balance_band);

// Vega-Lite point spec for a labeled dataset scatter.
nlohmann::ordered_json scatter_spec(const std::vector<ScatterPoint>& points,
                                    const std::string& x_field, const std::string& y_field,
                                    const std::string& config_digest);

// Diagnostic reports: full JSON, or a CSV summary
// (model,<per-field H...>,total_score,label).
nlohmann::ordered_json reports_to_json(const std::vector<DiagnosticReport>& reports,
                                       const HistogramBinning& binning,
                                       const DevianceRules& rules);
void write_reports_csv(std::ostream& out, const std::vector<DiagnosticReport>& reports,
                       const std::string& config_digest);

// Reference histogram set, persistable for reuse across runs.
nlohmann::ordered_json histograms_to_json(const std::vector<MetricHistogram>& histograms);
std::vector<MetricHistogram> histograms_from_json(const nlohmann::json& j);

}  // namespace convshape
