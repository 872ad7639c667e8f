#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <spaceprint/detection.hpp>
#include <spaceprint/errors.hpp>
#include <spaceprint/feature.hpp>

using namespace spaceprint;

namespace {

DetectionSet tiny_set() {
  return DetectionSet({{"a", "s1", 10}, {"b", "s1", 4}, {"a", "s2", 30}});
}

// Independent reference: literal enumeration of admissible triples.
std::vector<FeatureIndex> enumerate_triples(Time fd, Time fr) {
  std::vector<FeatureIndex> out;
  for (Time ts = 0; ts < fd; ts += fr)
    for (Time tau = fr; tau <= fd - ts; tau += fr)
      for (Time p = fr; p <= tau; p += fr)
        if (tau % p == 0) out.push_back({{ts, tau}, p});
  return out;
}

}  // namespace

TEST_CASE("detection set basics and bounds") {
  const DetectionSet dt = tiny_set();
  CHECK(dt.size() == 3);
  CHECK_FALSE(dt.empty());
  CHECK(dt.t_min() == 4);
  CHECK(dt.t_max() == 30);
  CHECK(dt.duration() == 26);
  CHECK(dt.records()[0].device_id == "a");  // supplied order kept
  CHECK(dt.time_unit() == "unit");
}

TEST_CASE("detection set rejects malformed records") {
  CHECK_THROWS_AS(DetectionSet({{"", "s", 1}}), InvalidInput);
  CHECK_THROWS_AS(DetectionSet({{"d", "", 1}}), InvalidInput);
  CHECK_THROWS_AS(DetectionSet({{"d", "s", -5}}), InvalidInput);
}

TEST_CASE("empty detection set") {
  const DetectionSet dt;
  CHECK(dt.empty());
  CHECK_THROWS_AS(dt.t_min(), EmptyDataset);
  CHECK_THROWS_AS(dt.t_max(), EmptyDataset);
  CHECK_THROWS_AS(dt.duration(), EmptyDataset);
  CHECK_THROWS_AS(normalize_time(dt), EmptyDataset);
}

TEST_CASE("normalize_time shifts the earliest record to zero") {
  const DetectionSet shifted = normalize_time(tiny_set());
  CHECK(shifted.t_min() == 0);
  CHECK(shifted.t_max() == 26);
  CHECK(shifted.records()[0].timestamp == 6);   // 10 - 4
  CHECK(shifted.records()[1].timestamp == 0);   // 4 - 4
  CHECK(shifted.records()[2].timestamp == 26);  // 30 - 4
  CHECK(shifted.duration() == tiny_set().duration());

  // Idempotent on already-normalized data.
  const DetectionSet again = normalize_time(shifted);
  for (std::size_t i = 0; i < shifted.size(); ++i)
    CHECK(again.records()[i].timestamp == shifted.records()[i].timestamp);
}

TEST_CASE("restrict_to_space filters and keeps order") {
  const DetectionSet s1 = restrict_to_space(tiny_set(), "s1");
  REQUIRE(s1.size() == 2);
  CHECK(s1.records()[0].device_id == "a");
  CHECK(s1.records()[1].device_id == "b");
  for (const Detection& d : s1.records()) CHECK(d.space_id == "s1");

  CHECK(restrict_to_space(tiny_set(), "nope").empty());
}

TEST_CASE("feature_count frozen values") {
  CHECK(feature_count(2, 1) == 4);
  CHECK(feature_count(4, 1) == 17);
  CHECK(feature_count(7, 1) == 57);
  CHECK(feature_count(12, 1) == 191);
  CHECK(feature_count(24, 1) == 904);
  // Only the ratio fd/fr matters.
  CHECK(feature_count(7 * 60, 60) == 57);
  CHECK(feature_count(1440, 60) == 904);
  // One admissible triple when fd == fr.
  CHECK(feature_count(5, 5) == 1);
  CHECK(feature_count(1, 1) == 1);
}

TEST_CASE("feature_count equals literal triple enumeration up to R = 24") {
  for (Time r = 1; r <= 24; ++r)
    for (Time fr : {Time{1}, Time{3}})
      CHECK(feature_count(r * fr, fr) ==
            static_cast<std::int64_t>(enumerate_triples(r * fr, fr).size()));
}

TEST_CASE("feature_count parameter validation") {
  CHECK_THROWS_AS(feature_count(4, 0), InvalidParameters);
  CHECK_THROWS_AS(feature_count(4, -2), InvalidParameters);
  CHECK_THROWS_AS(feature_count(2, 4), InvalidParameters);
  CHECK_THROWS_AS(feature_count(10, 4), InvalidParameters);
}

TEST_CASE("presence layout for fd=2 fr=1 is the canonical enumeration") {
  const auto layout = FeatureLayout::presence(2, 1);
  REQUIRE(layout->size() == 4);
  CHECK((*layout)[0] == FeatureIndex{{0, 1}, 1});
  CHECK((*layout)[1] == FeatureIndex{{0, 2}, 1});
  CHECK((*layout)[2] == FeatureIndex{{0, 2}, 2});
  CHECK((*layout)[3] == FeatureIndex{{1, 1}, 1});
}

TEST_CASE("presence layout matches literal enumeration order") {
  for (Time r : {Time{1}, Time{5}, Time{12}}) {
    for (Time fr : {Time{1}, Time{4}}) {
      const auto layout = FeatureLayout::presence(r * fr, fr);
      const auto expected = enumerate_triples(r * fr, fr);
      REQUIRE(layout->size() == expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(layout->entries()[i] == expected[i]);
    }
  }
}

TEST_CASE("density layout is one feature per base interval") {
  const auto layout = FeatureLayout::density(6, 2);
  REQUIRE(layout->size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK((*layout)[i].window.t_start == static_cast<Time>(i) * 2);
    CHECK((*layout)[i].window.tau == 2);
    CHECK((*layout)[i].sampling_period == 2);
  }
}

TEST_CASE("layout compatibility") {
  const auto a = FeatureLayout::presence(4, 2);
  const auto b = FeatureLayout::presence(4, 2);
  const auto c = FeatureLayout::presence(8, 2);
  const auto d = FeatureLayout::density(4, 2);
  CHECK(a->compatible_with(*b));
  CHECK_FALSE(a->compatible_with(*c));
  CHECK_FALSE(a->compatible_with(*d));
}

TEST_CASE("feature vector validation and comparability") {
  const auto layout = FeatureLayout::presence(2, 1);
  CHECK_THROWS_AS(FeatureVector({1.0, 2.0}, layout), InvalidParameters);
  CHECK_THROWS_AS(FeatureVector({1.0}, nullptr), InvalidParameters);

  const FeatureVector v({1.0, 0.5, 1.0, 0.5}, layout);
  const FeatureVector w({0.0, 0.0, 0.0, 0.0}, FeatureLayout::presence(2, 1));
  CHECK(v.comparable_with(w));
  CHECK(v.fd() == 2);
  CHECK(v.fr() == 1);
  CHECK(v[1] == 0.5);

  const FeatureVector other({0.0}, FeatureLayout::presence(1, 1));
  CHECK_FALSE(v.comparable_with(other));

  const FeatureVector blank;
  CHECK(blank.empty());
  CHECK_FALSE(blank.comparable_with(v));
  CHECK_FALSE(v.comparable_with(blank));
}
