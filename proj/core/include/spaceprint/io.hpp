#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spaceprint/detection.hpp"
#include "spaceprint/eval.hpp"
#include "spaceprint/feature.hpp"
#include "spaceprint/param_search.hpp"

namespace spaceprint {

// Shortest decimal representation that parses back to exactly `value`.
std::string format_double(double value);

// Reads a detection CSV with header `device_id,space_id,timestamp`.
// Timestamps must be non-negative base-10 integers; any malformed row (wrong
// field count, empty id, bad or negative timestamp) raises ParseError naming
// the line. The record count is logged at info level.
DetectionSet ingest_csv(const std::filesystem::path& path);
void write_detections_csv(const std::filesystem::path& path, const DetectionSet& dt);

// Ground truth rows `instance_id,space_id` (same ParseError contract).
void write_ground_truth_csv(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, std::string>>& truth);
std::vector<std::pair<std::string, std::string>> read_ground_truth_csv(
    const std::filesystem::path& path);

// Search trace as `candidate,score` rows, one per scored candidate.
void write_trace_csv(const std::filesystem::path& path, const SearchTrace& trace);

// Square headerless matrix, row-major.
void write_matrix_csv(const std::filesystem::path& path,
                      const std::vector<std::vector<double>>& matrix);

// Feature vectors as rows: header `<id_header>,f0,...,f{n-1}`.
void write_vectors_csv(const std::filesystem::path& path, std::string_view id_header,
                       const std::vector<std::string>& ids,
                       const std::vector<FeatureVector>& vectors);

// Cluster assignments as `point_id,cluster` rows.
void write_assignments_csv(const std::filesystem::path& path,
                           const std::vector<std::string>& point_ids,
                           const std::vector<int>& assignments);

// 2D embedding as `point_id,x,y,label` rows, plus an SVG scatter with one
// color per distinct label.
void write_coords_csv(const std::filesystem::path& path,
                      const std::vector<std::string>& point_ids,
                      const std::vector<std::array<double, 2>>& coords,
                      const std::vector<std::string>& labels);
void write_svg_scatter(const std::filesystem::path& path,
                       const std::vector<std::array<double, 2>>& coords,
                       const std::vector<std::string>& labels);

// Fingerprint JSON: {"space_id", "fd", "fr", "layout": [[t_start,tau,ts],...],
// "values": [...]}. The parser validates the layout against the canonical
// enumeration for (fd, fr) and throws ParseError on any mismatch.
std::string fingerprint_json(const Fingerprint& fingerprint, std::string_view space_id);
std::pair<std::string, Fingerprint> fingerprint_from_json(std::string_view json_text);

std::string eval_report_json(const EvalReport& report);

// Writes `content` verbatim (used for JSON artifacts).
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace spaceprint
