#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "rps/model_io.hpp"
#include "testutil.hpp"

using Catch::Matchers::WithinAbs;
using rps::model_kind;
using rps::parse_model_file;

namespace {

const std::string canonical_model = R"({
  "kind": "pm",
  "frame": ["A", "B"],
  "masses": [
    {"event": ["A"], "mass": 0.1},
    {"event": ["B"], "mass": 0.7},
    {"event": ["A", "B"], "mass": 0.2}
  ]
})";

}  // namespace

TEST_CASE("parsing a valid model file") {
  const auto mf = parse_model_file(canonical_model);
  CHECK(mf.kind == model_kind::pm);
  CHECK(mf.frame_labels == std::vector<std::string>{"A", "B"});
  REQUIRE(mf.masses.size() == 3);
  CHECK(mf.masses[2].first == std::vector<std::string>{"A", "B"});
  CHECK(mf.masses[2].second == 0.2);

  const auto pm = rps::to_pm(mf);
  CHECK(pm.mass_of(rps::permutation_event({1})) == 0.7);
}

TEST_CASE("event order in the wire format is significant") {
  const auto mf = parse_model_file(R"({
    "kind": "pm", "frame": ["A", "B"],
    "masses": [{"event": ["B", "A"], "mass": 1.0}]
  })");
  const auto pm = rps::to_pm(mf);
  CHECK(pm.mass_of(rps::permutation_event({1, 0})) == 1.0);
  CHECK(pm.mass_of(rps::permutation_event({0, 1})) == 0.0);
}

TEST_CASE("malformed documents are parse errors") {
  CHECK_THROWS_AS(parse_model_file("not json"), rps::parse_error);
  CHECK_THROWS_AS(parse_model_file("[1,2]"), rps::parse_error);
  CHECK_THROWS_AS(parse_model_file(R"({"frame": ["A"], "masses": []})"),
                  rps::parse_error);  // missing kind
  CHECK_THROWS_AS(
      parse_model_file(R"({"kind": "pm", "frame": [], "masses": []})"),
      rps::parse_error);
  CHECK_THROWS_AS(
      parse_model_file(R"({"kind": "woo", "frame": ["A"], "masses": []})"),
      rps::parse_error);
  CHECK_THROWS_AS(
      parse_model_file(
          R"({"kind": "pm", "frame": ["A"], "masses": [{"event": "A", "mass": 1}]})"),
      rps::parse_error);
  CHECK_THROWS_AS(
      parse_model_file(
          R"({"kind": "pm", "frame": ["A"], "masses": [{"event": ["A"], "mass": "x"}]})"),
      rps::parse_error);
}

TEST_CASE("unknown fields are rejected by name") {
  try {
    parse_model_file(R"({"kind": "pm", "frame": ["A"], "masses": [], "extra": 1})");
    FAIL("expected parse_error");
  } catch (const rps::parse_error& e) {
    CHECK(std::string(e.what()).find("extra") != std::string::npos);
  }
  CHECK_THROWS_AS(
      parse_model_file(
          R"({"kind": "pm", "frame": ["A"],
              "masses": [{"event": ["A"], "mass": 1, "note": "hi"}]})"),
      rps::parse_error);
}

TEST_CASE("unknown labels are parse errors with the entry named") {
  const auto mf = parse_model_file(R"({
    "kind": "pm", "frame": ["A", "B"],
    "masses": [{"event": ["C"], "mass": 1.0}]
  })");
  try {
    rps::to_pm(mf);
    FAIL("expected parse_error");
  } catch (const rps::parse_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("masses[0]") != std::string::npos);
    CHECK(msg.find("'C'") != std::string::npos);
  }
}

TEST_CASE("mass-function violations surface as validation errors") {
  const auto mf = parse_model_file(R"({
    "kind": "pm", "frame": ["A", "B"],
    "masses": [{"event": ["A"], "mass": 0.9}, {"event": ["B"], "mass": 0.6}]
  })");
  CHECK_THROWS_AS(rps::to_pm(mf), rps::validation_error);
  CHECK_NOTHROW(rps::to_pm(mf, /*renormalize=*/true));
}

TEST_CASE("kind mismatch") {
  const auto mf = parse_model_file(canonical_model);
  CHECK_THROWS_AS(rps::to_bpa(mf), rps::parse_error);
  CHECK_THROWS_AS(rps::to_probability(mf), rps::parse_error);
}

TEST_CASE("probability and bpa files") {
  const auto pd = rps::to_probability(parse_model_file(R"({
    "kind": "probability", "frame": ["A", "B"],
    "masses": [{"event": ["A"], "mass": 0.6}, {"event": ["B"], "mass": 0.4}]
  })"));
  CHECK(pd.probs() == std::vector<double>{0.6, 0.4});

  // unmentioned outcomes default to zero
  const auto sparse = rps::to_probability(parse_model_file(R"({
    "kind": "probability", "frame": ["A", "B"],
    "masses": [{"event": ["A"], "mass": 1.0}]
  })"));
  CHECK(sparse.probs() == std::vector<double>{1.0, 0.0});

  CHECK_THROWS_AS(rps::to_probability(parse_model_file(R"({
    "kind": "probability", "frame": ["A", "B"],
    "masses": [{"event": ["A", "B"], "mass": 1.0}]
  })")),
                  rps::parse_error);

  const auto bpa = rps::to_bpa(parse_model_file(R"({
    "kind": "bpa", "frame": ["A", "B"],
    "masses": [{"event": ["A"], "mass": 0.3}, {"event": ["B", "A"], "mass": 0.7}]
  })"));
  CHECK(bpa.mass_of({0, 1}) == 0.7);
}

TEST_CASE("emitted models re-ingest to the same mass function") {
  std::mt19937 rng(47);
  const auto pm = testutil::random_pm(testutil::letters_frame(3), rng);
  const auto text = rps::to_model_json(pm).dump();
  const auto back = rps::to_pm(parse_model_file(text));
  REQUIRE(back.focal_count() == pm.focal_count());
  for (const auto& [event, mass] : pm.masses()) {
    CHECK(back.mass_of(event) == mass);  // bit-identical through JSON
  }
}
