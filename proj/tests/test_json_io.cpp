#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "wmono/json_io.hpp"

using namespace wmono;
using namespace wmono::testing;
using nlohmann::json;

TEST_CASE("parse_mixture_spec reads the interchange format") {
  const json j = json::parse(R"({
    "n": 3, "d": 2,
    "coeffs": [[1, 1, 0.5773502691896258, 0.0],
               [2, 1, 0.5773502691896258, 0.0],
               [3, 1, 0.5773502691896258, 0.0]],
    "p": 0.5
  })");
  const MixtureSpec mix = parse_mixture_spec(j);
  CHECK(mix.wclass().subsystem_count() == 3);
  CHECK(mix.wclass().local_dim() == 2);
  CHECK(mix.p() == doctest::Approx(0.5));
  CHECK(std::abs(mix.wclass().coeff(0, 1) - Complex{1.0 / std::sqrt(3.0), 0.0}) < 1e-12);
}

TEST_CASE("parse_mixture_spec normalizes unnormalized coefficient tables") {
  const json j = json::parse(R"({"n": 2, "d": 2, "coeffs": [[1, 1, 3.0, 0.0], [2, 1, 4.0, 0.0]]})");
  const MixtureSpec mix = parse_mixture_spec(j);
  CHECK(mix.wclass().is_normalized());
  CHECK(std::abs(mix.wclass().coeff(0, 1) - Complex{0.6, 0.0}) < 1e-14);
  CHECK(mix.p() == 1.0);  // defaults to the pure state
}

TEST_CASE("parse_mixture_spec accepts ancilla coefficients") {
  const json j = json::parse(R"({
    "n": 2, "d": 3,
    "coeffs": [[1, 1, 1.0, 0.0], [2, 2, 1.0, 0.0]],
    "p": 0.25,
    "ancilla": [[1, 0.6, 0.0], [2, 0.0, 0.8]]
  })");
  const MixtureSpec mix = parse_mixture_spec(j);
  REQUIRE(mix.ancilla().has_value());
  CHECK(std::abs((*mix.ancilla())(0) - Complex{0.6, 0.0}) < 1e-14);
  CHECK(std::abs((*mix.ancilla())(1) - Complex{0.0, 0.8}) < 1e-14);
}

TEST_CASE("parse_mixture_spec rejects malformed input") {
  CHECK_THROWS_AS(parse_mixture_spec(json::parse("[1,2]")), std::invalid_argument);
  CHECK_THROWS_AS(parse_mixture_spec(json::parse(R"({"n": 2, "d": 2})")), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_mixture_spec(json::parse(R"({"n": 2, "d": 2, "coeffs": [[1, 1, 1.0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_mixture_spec(json::parse(R"({"n": 2, "d": 2, "coeffs": [[3, 1, 1.0, 0.0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_mixture_spec(json::parse(R"({"n": 2, "d": 2, "coeffs": [[1, 2, 1.0, 0.0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(parse_mixture_spec(json::parse(
                      R"({"n": 2, "d": 2, "coeffs": [[1, 1, 1.0, 0.0], [1, 1, 0.5, 0.0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_mixture_spec(json::parse(R"({"n": 2, "d": 2, "coeffs": [[1, 1, 0.0, 0.0]]})")),
      std::invalid_argument);  // zero norm
  CHECK_THROWS_AS(parse_mixture_spec(json::parse(
                      R"({"n": 2, "d": 2, "coeffs": [[1, 1, 1.0, 0.0]], "p": 1.5})")),
                  std::invalid_argument);
}

TEST_CASE("mixture specs round trip through JSON") {
  for (int repeat = 0; repeat < 10; ++repeat) {
    const auto seed = derive_seed(131, "test/jsonrt", static_cast<std::uint64_t>(repeat));
    const int n = 2 + static_cast<int>(seed % 4);
    const int d = 2 + static_cast<int>((seed >> 4) % 2);
    const WClassSpec spec = random_wclass(n, d, seed);
    std::optional<Vector> ancilla;
    if (repeat % 2 == 0) {
      Rng rng(derive_seed(seed, "anc"));
      Vector x(d - 1);
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.gaussian_complex();
      x /= x.norm();
      ancilla = std::move(x);
    }
    const MixtureSpec mix(spec, 0.01 * static_cast<double>(seed % 101), ancilla);
    const MixtureSpec back = parse_mixture_spec(mixture_spec_to_json(mix));
    CHECK(max_entry_distance(back.wclass().coeffs(), mix.wclass().coeffs()) < 1e-15);
    CHECK(back.p() == mix.p());
    CHECK(back.ancilla().has_value() == mix.ancilla().has_value());
    if (back.ancilla()) {
      CHECK((*back.ancilla() - *mix.ancilla()).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("partition JSON uses 1-based labels") {
  const Partition partition = parse_partition(json::parse("[[1,3],[2,5,6],[4,7]]"));
  REQUIRE(partition.block_count() == 3);
  CHECK(partition.block(0).indices() == std::vector<int>{0, 2});
  CHECK(partition.block(1).indices() == std::vector<int>{1, 4, 5});
  CHECK(partition.block(2).indices() == std::vector<int>{3, 6});
  CHECK_NOTHROW(validate_partition(partition, 7));

  CHECK(partition_to_json(partition) == json::parse("[[1,3],[2,5,6],[4,7]]"));

  CHECK_THROWS_AS(parse_partition(json::parse("[]")), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition(json::parse("[[0]]")), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition(json::parse("[1,2]")), std::invalid_argument);
}

TEST_CASE("report JSON carries the schema keys") {
  const MonogamyReport report = build_report(MixtureSpec(symmetric_w_spec(3), 1.0),
                                             Partition::finest(3), 0,
                                             ReportMode::kClosedForm, 8, 1);
  const json j = report_to_json(report);
  for (const char* key : {"focus", "lhs", "pairs", "residual_ckw", "residual_dual", "mode",
                          "tolerances", "provenance"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["focus"] == 1);  // 1-based on the wire
  CHECK(j["pairs"].size() == 2);
  CHECK(j["pairs"][0].contains("k"));
  CHECK(j["pairs"][0].contains("c2"));
  CHECK(j["pairs"][0].contains("coa2"));
  CHECK(j["provenance"]["lhs"] == "closed-form");
  CHECK(j["tolerances"]["algebraic"].get<double>() == doctest::Approx(1e-9));
}

TEST_CASE("report CSV flattening") {
  const MonogamyReport report = build_report(MixtureSpec(symmetric_w_spec(3), 1.0),
                                             Partition::finest(3), 1,
                                             ReportMode::kClosedForm, 8, 1);
  const std::string header = report_csv_header();
  const std::string row = report_csv_row("7", report);
  CHECK(header.substr(0, 15) == "instance,focus,");
  CHECK(row.substr(0, 4) == "7,2,");
  // Same column count in header and row.
  const auto count = [](const std::string& s) {
    return std::count(s.begin(), s.end(), ',');
  };
  CHECK(count(header) == count(row));
}

TEST_CASE("format_double round trips") {
  for (const double v : {0.0, 1.0 / 3.0, 8.0 / 9.0, 1e-300, -2.5e17}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}
