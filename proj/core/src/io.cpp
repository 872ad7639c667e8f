#include "spaceprint/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "spaceprint/errors.hpp"
#include "spaceprint/log.hpp"

namespace spaceprint {

namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // \n endings on every platform
  if (!out) throw InvalidInput("cannot open '" + path.string() + "' for writing");
  return out;
}

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line,
                             const std::string& what) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
}

// CSV cells are written verbatim, so they must stay delimiter-free.
void check_cell(std::string_view cell) {
  if (cell.find_first_of(",\"\n\r") != std::string_view::npos)
    throw InvalidInput("id '" + std::string(cell) + "' contains CSV delimiters");
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// Reads one line, dropping a trailing '\r' so CRLF files parse too.
bool get_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

void expect_header(std::ifstream& in, const std::filesystem::path& path,
                   std::string_view expected) {
  std::string header;
  if (!get_line(in, header)) parse_fail(path, 1, "missing header");
  if (header != expected)
    parse_fail(path, 1, "expected header '" + std::string(expected) + "', got '" +
                            header + "'");
}

Time parse_timestamp(const std::string& field, const std::filesystem::path& path,
                     std::size_t line) {
  Time value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    parse_fail(path, line, "timestamp '" + field + "' is not a base-10 integer");
  if (value < 0) parse_fail(path, line, "timestamp " + field + " is negative");
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw InvalidInput("cannot format double");
  return std::string(buffer, ptr);
}

DetectionSet ingest_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  expect_header(in, path, "device_id,space_id,timestamp");

  std::vector<Detection> records;
  std::string line;
  std::size_t line_no = 1;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;  // tolerate a trailing blank line
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 3)
      parse_fail(path, line_no,
                 "expected 3 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty()) parse_fail(path, line_no, "empty device id");
    if (fields[1].empty()) parse_fail(path, line_no, "empty space id");
    const Time t = parse_timestamp(fields[2], path, line_no);
    records.push_back({std::move(fields[0]), std::move(fields[1]), t});
  }

  if (log_enabled(LogLevel::info))
    log_info("ingested " + std::to_string(records.size()) + " records from '" +
             path.string() + "'");
  return DetectionSet(std::move(records));
}

void write_detections_csv(const std::filesystem::path& path, const DetectionSet& dt) {
  std::ofstream out = open_out(path);
  out << "device_id,space_id,timestamp\n";
  for (const Detection& d : dt.records()) {
    check_cell(d.device_id);
    check_cell(d.space_id);
    out << d.device_id << ',' << d.space_id << ',' << d.timestamp << '\n';
  }
}

void write_ground_truth_csv(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, std::string>>& truth) {
  std::ofstream out = open_out(path);
  out << "instance_id,space_id\n";
  for (const auto& [instance, space] : truth) {
    check_cell(instance);
    check_cell(space);
    out << instance << ',' << space << '\n';
  }
}

std::vector<std::pair<std::string, std::string>> read_ground_truth_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  expect_header(in, path, "instance_id,space_id");

  std::vector<std::pair<std::string, std::string>> truth;
  std::string line;
  std::size_t line_no = 1;
  while (get_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 2)
      parse_fail(path, line_no,
                 "expected 2 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty()) parse_fail(path, line_no, "empty instance id");
    if (fields[1].empty()) parse_fail(path, line_no, "empty space id");
    truth.emplace_back(std::move(fields[0]), std::move(fields[1]));
  }
  return truth;
}

void write_trace_csv(const std::filesystem::path& path, const SearchTrace& trace) {
  std::ofstream out = open_out(path);
  out << "candidate,score\n";
  for (const SearchTrace::Entry& e : trace.entries)
    out << e.candidate << ',' << format_double(e.score) << '\n';
}

void write_matrix_csv(const std::filesystem::path& path,
                      const std::vector<std::vector<double>>& matrix) {
  std::ofstream out = open_out(path);
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ',';
      out << format_double(row[j]);
    }
    out << '\n';
  }
}

void write_vectors_csv(const std::filesystem::path& path, std::string_view id_header,
                       const std::vector<std::string>& ids,
                       const std::vector<FeatureVector>& vectors) {
  if (ids.size() != vectors.size())
    throw InvalidInput("id and vector counts differ");
  std::ofstream out = open_out(path);
  out << id_header;
  const std::size_t width = vectors.empty() ? 0 : vectors.front().size();
  for (std::size_t j = 0; j < width; ++j) out << ",f" << j;
  out << '\n';
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    check_cell(ids[i]);
    out << ids[i];
    for (std::size_t j = 0; j < vectors[i].size(); ++j)
      out << ',' << format_double(vectors[i][j]);
    out << '\n';
  }
}

void write_assignments_csv(const std::filesystem::path& path,
                           const std::vector<std::string>& point_ids,
                           const std::vector<int>& assignments) {
  if (point_ids.size() != assignments.size())
    throw InvalidInput("point id and assignment counts differ");
  std::ofstream out = open_out(path);
  out << "point_id,cluster\n";
  for (std::size_t i = 0; i < point_ids.size(); ++i) {
    check_cell(point_ids[i]);
    out << point_ids[i] << ',' << assignments[i] << '\n';
  }
}

void write_coords_csv(const std::filesystem::path& path,
                      const std::vector<std::string>& point_ids,
                      const std::vector<std::array<double, 2>>& coords,
                      const std::vector<std::string>& labels) {
  if (point_ids.size() != coords.size() || labels.size() != coords.size())
    throw InvalidInput("point id, coordinate and label counts differ");
  std::ofstream out = open_out(path);
  out << "point_id,x,y,label\n";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    check_cell(point_ids[i]);
    check_cell(labels[i]);
    out << point_ids[i] << ',' << format_double(coords[i][0]) << ','
        << format_double(coords[i][1]) << ',' << labels[i] << '\n';
  }
}

void write_svg_scatter(const std::filesystem::path& path,
                       const std::vector<std::array<double, 2>>& coords,
                       const std::vector<std::string>& labels) {
  if (labels.size() != coords.size())
    throw InvalidInput("coordinate and label counts differ");

  // First-appearance order keeps colors stable run to run.
  static constexpr std::array<const char*, 12> kPalette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#8c6d31"};
  std::unordered_map<std::string, std::size_t> color_of;
  std::vector<std::string> legend;
  for (const std::string& label : labels)
    if (color_of.try_emplace(label, color_of.size()).second) legend.push_back(label);

  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    lo_x = std::min(lo_x, coords[i][0]);
    hi_x = std::max(hi_x, coords[i][0]);
    lo_y = std::min(lo_y, coords[i][1]);
    hi_y = std::max(hi_y, coords[i][1]);
  }
  if (hi_x - lo_x <= 0.0) hi_x = lo_x + 1.0;
  if (hi_y - lo_y <= 0.0) hi_y = lo_y + 1.0;

  const double width = 640.0, height = 480.0, margin = 48.0;
  auto sx = [&](double x) {
    return margin + (x - lo_x) / (hi_x - lo_x) * (width - 2.0 * margin);
  };
  auto sy = [&](double y) {  // SVG y grows downward
    return height - margin - (y - lo_y) / (hi_y - lo_y) * (height - 2.0 * margin);
  };

  std::ofstream out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const char* color = kPalette[color_of[labels[i]] % kPalette.size()];
    out << "  <circle cx=\"" << format_double(sx(coords[i][0])) << "\" cy=\""
        << format_double(sy(coords[i][1])) << "\" r=\"4\" fill=\"" << color
        << "\" fill-opacity=\"0.8\"><title>" << labels[i] << "</title></circle>\n";
  }
  for (std::size_t l = 0; l < legend.size(); ++l) {
    const double y = 16.0 + 16.0 * static_cast<double>(l);
    out << "  <circle cx=\"12\" cy=\"" << format_double(y - 4.0)
        << "\" r=\"4\" fill=\"" << kPalette[l % kPalette.size()] << "\"/>\n";
    out << "  <text x=\"22\" y=\"" << format_double(y)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << legend[l]
        << "</text>\n";
  }
  out << "</svg>\n";
}

std::string fingerprint_json(const Fingerprint& fingerprint, std::string_view space_id) {
  if (fingerprint.vector.empty()) throw EmptyInput("fingerprint holds no vector");
  ordered_json j;
  j["space_id"] = std::string(space_id);
  j["fd"] = fingerprint.fd;
  j["fr"] = fingerprint.fr;
  ordered_json layout = ordered_json::array();
  for (const FeatureIndex& f : fingerprint.vector.layout().entries())
    layout.push_back({f.window.t_start, f.window.tau, f.sampling_period});
  j["layout"] = std::move(layout);
  j["values"] = fingerprint.vector.values();
  return j.dump() + "\n";
}

std::pair<std::string, Fingerprint> fingerprint_from_json(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fingerprint JSON: ") + e.what());
  }
  try {
    const auto space_id = j.at("space_id").get<std::string>();
    const auto fd = j.at("fd").get<Time>();
    const auto fr = j.at("fr").get<Time>();
    const auto values = j.at("values").get<std::vector<double>>();

    auto layout = FeatureLayout::presence(fd, fr);
    const auto& rows = j.at("layout");
    if (rows.size() != layout->size())
      throw ParseError("fingerprint JSON: layout has " + std::to_string(rows.size()) +
                       " entries, expected " + std::to_string(layout->size()));
    for (std::size_t i = 0; i < layout->size(); ++i) {
      const FeatureIndex& f = (*layout)[i];
      if (rows[i].size() != 3 || rows[i][0].get<Time>() != f.window.t_start ||
          rows[i][1].get<Time>() != f.window.tau ||
          rows[i][2].get<Time>() != f.sampling_period)
        throw ParseError("fingerprint JSON: layout entry " + std::to_string(i) +
                         " is not the canonical enumeration");
    }
    return {space_id, Fingerprint{FeatureVector(values, std::move(layout)), fd, fr}};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fingerprint JSON: ") + e.what());
  } catch (const InvalidParameters& e) {
    throw ParseError(std::string("fingerprint JSON: ") + e.what());
  }
}

std::string eval_report_json(const EvalReport& report) {
  ordered_json j;
  j["accuracy"] = report.accuracy;
  j["rand_index"] = report.rand_index;
  j["f_measure"] = report.f_measure;
  j["nmi"] = report.nmi;
  return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out = open_out(path);
  out << content;
}

}  // namespace spaceprint
