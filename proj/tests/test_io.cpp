#include <catch_amalgamated.hpp>

#include "gft/io.hpp"
#include "gft/sampling.hpp"

using namespace gft;

TEST_CASE("series JSON encoding") {
  const GapSeries f(1, {{2, 0.25}});
  CHECK(to_json(f).dump() == R"({"k":1,"coefficients":[{"nu":2,"a":0.25}]})");
  CHECK(to_json(GapSeries::identity(3)).dump() == R"({"k":3,"coefficients":[]})");
}

TEST_CASE("series JSON round-trips exactly") {
  Rng rng(81);
  for (int i = 0; i < 500; ++i) {
    const ClassParams p = random_class_params(rng);
    const GapSeries f = random_member(p, rng);
    const std::string text = to_json(f).dump();
    CHECK(series_from_json(Json::parse(text)) == f);
  }
}

TEST_CASE("series decoding rejects invalid input") {
  auto code_of = [](const char* text) {
    try {
      series_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error for " << text);
    return Errc::parse;
  };
  CHECK(code_of(R"({"k":1,"coefficients":[{"nu":1,"a":0.1}]})") == Errc::index);
  CHECK(code_of(R"({"k":1,"coefficients":[{"nu":2,"a":-0.1}]})") == Errc::domain);
  CHECK(code_of(R"({"k":1,"coefficients":[{"nu":2,"a":0.1},{"nu":2,"a":0.2}]})") == Errc::parse);
  CHECK(code_of(R"({"coefficients":[]})") == Errc::parse);
  CHECK(code_of(R"({"k":1.5,"coefficients":[]})") == Errc::parse);
  CHECK(code_of(R"({"k":1,"coefficients":{}})") == Errc::parse);
  CHECK(code_of(R"({"k":1,"coefficients":[{"nu":2,"a":"x"}]})") == Errc::parse);
  CHECK(code_of(R"([1,2])") == Errc::parse);
}

TEST_CASE("params JSON") {
  const Json j = Json::parse(R"({"k":2,"tau":0.9,"mu":0.5,"delta":0.25,"gamma":0.1})");
  const ClassParams p = params_from_json(j);
  CHECK(p.k() == 2);
  CHECK(p.tau() == 0.9);
  CHECK(to_json(p) == j);
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"k":1,"tau":1,"mu":1,"delta":1,"gamma":0})")), Error);
  CHECK_NOTHROW(params_from_json(Json::parse(R"({"k":1,"tau":1,"mu":1,"delta":1,"gamma":0})"), DeltaRange::closed));
  try {
    params_from_json(Json::parse(R"({"k":1,"tau":1,"mu":1,"delta":0})"));
  } catch (const Error& e) {
    CHECK(e.field() == "gamma");
  }
}

TEST_CASE("result and error encodings") {
  CHECK(to_json(Membership{true, 1.0, 0.0}).dump() == R"({"member":true,"functional":1.0,"margin":0.0})");
  CHECK(to_json(RadiusResult{0.5, 2, false}).dump() == R"({"r":0.5,"nu_star":2,"capped":false})");
  CHECK(to_json(Interval{0.25, 0.75}).dump() == R"({"lo":0.25,"hi":0.75})");
  const Json e = error_json(Error(Errc::index, "bad", "nu"));
  CHECK(e.dump() == R"({"error":{"code":"index","message":"bad","field":"nu"}})");
}
