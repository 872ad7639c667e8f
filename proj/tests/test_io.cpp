#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <spaceprint/detection.hpp>
#include <spaceprint/errors.hpp>
#include <spaceprint/feature.hpp>
#include <spaceprint/io.hpp>
#include <spaceprint/param_search.hpp>
#include <spaceprint/rng.hpp>
#include <spaceprint/vectorize.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace spaceprint;
namespace fs = std::filesystem;

namespace {

fs::path tmp(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "spaceprint_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

fs::path write_raw(const std::string& name, const std::string& content) {
  const fs::path path = tmp(name);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("format_double: shortest representation that round-trips") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.5) == "-2.5");

  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const double value =
        (rng.uniform_real() * 2.0 - 1.0) *
        std::pow(10.0, static_cast<double>(rng.uniform_int(-12, 12)));
    const std::string text = format_double(value);
    CHECK(std::strtod(text.c_str(), nullptr) == value);
  }
}

TEST_CASE("detections csv: golden bytes and round-trip") {
  const DetectionSet dt({{"aa:bb", "room1", 0},
                         {"aa:bb", "room1", 5},
                         {"cc:dd", "room2", 3}});
  const fs::path path = tmp("detections.csv");
  write_detections_csv(path, dt);
  CHECK(slurp(path) ==
        "device_id,space_id,timestamp\n"
        "aa:bb,room1,0\n"
        "aa:bb,room1,5\n"
        "cc:dd,room2,3\n");

  const DetectionSet back = ingest_csv(path);
  REQUIRE(back.size() == dt.size());
  for (std::size_t i = 0; i < dt.size(); ++i) {
    CHECK(back.records()[i].device_id == dt.records()[i].device_id);
    CHECK(back.records()[i].space_id == dt.records()[i].space_id);
    CHECK(back.records()[i].timestamp == dt.records()[i].timestamp);
  }
}

TEST_CASE("detections csv: CRLF and trailing blank lines are tolerated") {
  const fs::path path = write_raw(
      "crlf.csv", "device_id,space_id,timestamp\r\na,s,1\r\nb,s,2\r\n\r\n");
  const DetectionSet dt = ingest_csv(path);
  REQUIRE(dt.size() == 2);
  CHECK(dt.records()[1].device_id == "b");
  CHECK(dt.records()[1].timestamp == 2);
}

TEST_CASE("detections csv: every malformed row names its line") {
  const std::string header = "device_id,space_id,timestamp\n";

  CHECK_THROWS_AS(ingest_csv(tmp("missing_file.csv")), ParseError);
  CHECK_THROWS_WITH_AS(ingest_csv(write_raw("bad_header.csv", "wrong\na,s,1\n")),
                       doctest::Contains(":1:"), ParseError);
  CHECK_THROWS_WITH_AS(
      ingest_csv(write_raw("short_row.csv", header + "a,s,1\nb,s\n")),
      doctest::Contains(":3:"), ParseError);
  CHECK_THROWS_WITH_AS(
      ingest_csv(write_raw("long_row.csv", header + "a,s,1,extra\n")),
      doctest::Contains("expected 3 fields"), ParseError);
  CHECK_THROWS_WITH_AS(ingest_csv(write_raw("empty_dev.csv", header + ",s,1\n")),
                       doctest::Contains("empty device id"), ParseError);
  CHECK_THROWS_WITH_AS(ingest_csv(write_raw("empty_space.csv", header + "a,,1\n")),
                       doctest::Contains("empty space id"), ParseError);
  CHECK_THROWS_WITH_AS(ingest_csv(write_raw("bad_ts.csv", header + "a,s,12x\n")),
                       doctest::Contains("not a base-10 integer"), ParseError);
  CHECK_THROWS_WITH_AS(ingest_csv(write_raw("plus_ts.csv", header + "a,s,+5\n")),
                       doctest::Contains("not a base-10 integer"), ParseError);
  CHECK_THROWS_WITH_AS(ingest_csv(write_raw("neg_ts.csv", header + "a,s,-5\n")),
                       doctest::Contains("negative"), ParseError);
}

TEST_CASE("csv ids may not contain delimiters") {
  const fs::path path = tmp("delim.csv");
  CHECK_THROWS_AS(write_detections_csv(path, DetectionSet({{"a,b", "s", 0}})),
                  InvalidInput);
  CHECK_THROWS_AS(write_ground_truth_csv(path, {{"i1", "bad\nlabel"}}), InvalidInput);
  CHECK_THROWS_AS(write_assignments_csv(path, {"p\"q"}, {0}), InvalidInput);
}

TEST_CASE("ground truth csv: golden bytes and round-trip") {
  const std::vector<std::pair<std::string, std::string>> truth = {
      {"s0_i0", "s0"}, {"s0_i1", "s0"}, {"s1_i0", "s1"}};
  const fs::path path = tmp("truth.csv");
  write_ground_truth_csv(path, truth);
  CHECK(slurp(path) == "instance_id,space_id\ns0_i0,s0\ns0_i1,s0\ns1_i0,s1\n");
  CHECK(read_ground_truth_csv(path) == truth);

  CHECK_THROWS_WITH_AS(
      read_ground_truth_csv(write_raw("bad_truth.csv", "instance_id,space_id\na\n")),
      doctest::Contains("expected 2 fields"), ParseError);
}

TEST_CASE("trace csv: golden bytes") {
  SearchTrace trace;
  trace.entries = {{60, 0.25}, {120, 0.5}, {180, 0.125}};
  trace.chosen = 60;
  const fs::path path = tmp("trace.csv");
  write_trace_csv(path, trace);
  CHECK(slurp(path) == "candidate,score\n60,0.25\n120,0.5\n180,0.125\n");
}

TEST_CASE("matrix csv: headerless row-major golden bytes") {
  const fs::path path = tmp("matrix.csv");
  write_matrix_csv(path, {{0.0, 0.5}, {0.5, 0.0}});
  CHECK(slurp(path) == "0,0.5\n0.5,0\n");
}

TEST_CASE("vectors csv: header width follows the first vector") {
  const auto layout = FeatureLayout::density(4, 1);
  const std::vector<FeatureVector> vectors = {
      FeatureVector({1.0, 0.5, 0.0, 0.25}, layout),
      FeatureVector({0.0, 1.0, 1.0, 0.5}, layout)};
  const fs::path path = tmp("vectors.csv");
  write_vectors_csv(path, "space_id", {"s0", "s1"}, vectors);
  CHECK(slurp(path) ==
        "space_id,f0,f1,f2,f3\n"
        "s0,1,0.5,0,0.25\n"
        "s1,0,1,1,0.5\n");
  CHECK_THROWS_AS(write_vectors_csv(path, "space_id", {"only_one"}, vectors),
                  InvalidInput);
}

TEST_CASE("assignments csv: golden bytes") {
  const fs::path path = tmp("assign.csv");
  write_assignments_csv(path, {"p0", "p1", "p2"}, {1, 0, 1});
  CHECK(slurp(path) == "point_id,cluster\np0,1\np1,0\np2,1\n");
  CHECK_THROWS_AS(write_assignments_csv(path, {"p0"}, {0, 1}), InvalidInput);
}

TEST_CASE("coords csv: golden bytes") {
  const fs::path path = tmp("coords.csv");
  write_coords_csv(path, {"p0", "p1"}, {{0.5, -1.5}, {2.0, 0.0}}, {"a", "b"});
  CHECK(slurp(path) == "point_id,x,y,label\np0,0.5,-1.5,a\np1,2,0,b\n");
  CHECK_THROWS_AS(write_coords_csv(path, {"p0"}, {{0, 0}, {1, 1}}, {"a", "b"}),
                  InvalidInput);
}

TEST_CASE("svg scatter: one circle per point, one color per label, stable bytes") {
  const std::vector<std::array<double, 2>> coords = {
      {0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const std::vector<std::string> labels = {"alpha", "alpha", "beta", "beta"};
  const fs::path path = tmp("scatter.svg");
  write_svg_scatter(path, coords, labels);
  const std::string svg = slurp(path);

  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  std::size_t circles = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++circles;
    pos += 7;
  }
  CHECK(circles == 4 + 2);  // points plus legend markers
  CHECK(svg.find("<title>alpha</title>") != std::string::npos);
  CHECK(svg.find("<title>beta</title>") != std::string::npos);
  CHECK(svg.find(">alpha</text>") != std::string::npos);
  CHECK(svg.find(">beta</text>") != std::string::npos);
  // Two distinct palette entries in use.
  CHECK(svg.find("#1f77b4") != std::string::npos);
  CHECK(svg.find("#ff7f0e") != std::string::npos);

  const fs::path again = tmp("scatter2.svg");
  write_svg_scatter(again, coords, labels);
  CHECK(slurp(again) == svg);  // byte-deterministic

  // Degenerate spans must not divide by zero.
  const fs::path flat = tmp("flat.svg");
  write_svg_scatter(flat, {{2.0, 3.0}, {2.0, 3.0}}, {"x", "y"});
  CHECK(slurp(flat).find("nan") == std::string::npos);

  CHECK_THROWS_AS(write_svg_scatter(path, coords, {"too", "few"}), InvalidInput);
}

TEST_CASE("fingerprint json: round-trip preserves every field bit-exactly") {
  const auto layout = FeatureLayout::presence(4, 2);
  const Fingerprint fp{FeatureVector({1.0, 1.0 / 3.0, 0.5, 0.0}, layout), 4, 2};
  const std::string text = fingerprint_json(fp, "room7");
  CHECK(text.back() == '\n');

  const auto [space_id, back] = fingerprint_from_json(text);
  CHECK(space_id == "room7");
  CHECK(back.fd == 4);
  CHECK(back.fr == 2);
  CHECK(back.vector.values() == fp.vector.values());
  CHECK(back.vector.layout().compatible_with(fp.vector.layout()));

  CHECK_THROWS_AS(fingerprint_json(Fingerprint{}, "empty"), EmptyInput);
}

TEST_CASE("fingerprint json: tampered documents are rejected") {
  const auto layout = FeatureLayout::presence(4, 2);
  const Fingerprint fp{FeatureVector({1.0, 0.5, 0.25, 0.0}, layout), 4, 2};
  const std::string text = fingerprint_json(fp, "s");

  CHECK_THROWS_AS(fingerprint_from_json("this is not json"), ParseError);
  CHECK_THROWS_AS(fingerprint_from_json("{}"), ParseError);

  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  j["layout"][0][0] = j["layout"][0][0].get<long long>() + 1;  // break canon
  CHECK_THROWS_WITH_AS(fingerprint_from_json(j.dump()),
                       doctest::Contains("canonical"), ParseError);

  j = nlohmann::ordered_json::parse(text);
  j["layout"].erase(0);  // wrong entry count
  CHECK_THROWS_WITH_AS(fingerprint_from_json(j.dump()),
                       doctest::Contains("layout has"), ParseError);

  j = nlohmann::ordered_json::parse(text);
  j.erase("values");
  CHECK_THROWS_AS(fingerprint_from_json(j.dump()), ParseError);

  j = nlohmann::ordered_json::parse(text);
  j["fr"] = 3;  // does not divide fd -> invalid layout parameters
  CHECK_THROWS_AS(fingerprint_from_json(j.dump()), ParseError);
}

TEST_CASE("fingerprint json: layout written in raw time units") {
  // fd=4, fr=2 enumerates (0,2,2), (0,4,2), (0,4,4), (2,2,2).
  const auto layout = FeatureLayout::presence(4, 2);
  const Fingerprint fp{FeatureVector({1.0, 0.5, 0.25, 0.0}, layout), 4, 2};
  const nlohmann::ordered_json j =
      nlohmann::ordered_json::parse(fingerprint_json(fp, "s"));
  const auto rows = j.at("layout");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == nlohmann::ordered_json({0, 2, 2}));
  CHECK(rows[1] == nlohmann::ordered_json({0, 4, 2}));
  CHECK(rows[2] == nlohmann::ordered_json({0, 4, 4}));
  CHECK(rows[3] == nlohmann::ordered_json({2, 2, 2}));
}

TEST_CASE("eval report json: stable key order and trailing newline") {
  const std::string text = eval_report_json({0.5, 0.25, 0.125, 1.0});
  CHECK(text ==
        "{\n"
        "  \"accuracy\": 0.5,\n"
        "  \"rand_index\": 0.25,\n"
        "  \"f_measure\": 0.125,\n"
        "  \"nmi\": 1.0\n"
        "}\n");
}

TEST_CASE("write_text_file writes verbatim") {
  const fs::path path = tmp("verbatim.txt");
  write_text_file(path, "line1\nline2");
  CHECK(slurp(path) == "line1\nline2");
}
