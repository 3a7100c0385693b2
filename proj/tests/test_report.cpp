#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hardy/report.hpp"

using namespace hardy;

TEST_SUITE("report") {
  TEST_CASE("complex and blaschke serialization") {
    CHECK(to_json(cplx(1.5, -2.0)) == json::array({1.5, -2.0}));
    BlaschkeProduct B(cplx(0.6, 0.8), 2, {{cplx(0.1, 0.2), 2}, {-0.7, 1}});
    BlaschkeProduct back = blaschke_from_json(json::parse(to_json(B).dump()));
    CHECK(equal_exact(back, B, 0.0));
    CHECK(back.zeros()[0].a == B.zeros()[0].a);
  }

  TEST_CASE("doubles survive text serialization bit for bit") {
    const double x = 0.1 + 0.2, y = 1.0 / 3.0;
    json j = json::parse(json{{"x", x}, {"y", y}}.dump());
    CHECK(j["x"].get<double>() == x);
    CHECK(j["y"].get<double>() == y);
  }

  TEST_CASE("symbols round trip") {
    for (const SymbolSpec& s :
         {SymbolSpec::unimodular(cplx(0, 1), BlaschkeProduct::factor(0.3), BlaschkeProduct::z_power(2)),
          SymbolSpec::analytic(RationalFunction(Polynomial({0.5, 0.5}), Polynomial({2.0, 1.0}))),
          SymbolSpec::arc(ArcSet({{0.0, 1.0}, {2.0, 3.0}}))}) {
      SymbolSpec b = symbol_from_json(json::parse(to_json(s).dump()));
      for (double t : {0.5, 2.5, 4.0}) CHECK(b.evaluate(t) == s.evaluate(t));
    }
  }

  TEST_CASE("NA reports round trip losslessly") {
    BlaschkeProduct z = BlaschkeProduct::z_power(1);
    for (const SymbolSpec& s :
         {SymbolSpec::unimodular(1.0, BlaschkeProduct::factor(-0.3), BlaschkeProduct::factor(0.5)),
          SymbolSpec::analytic(RationalFunction(Polynomial({0.5, 0.5}))), SymbolSpec::arc(ArcSet({{0.0, kPi}}))}) {
      NAReport r = decide(s, z, NumericConfig{{16}});
      json j = to_json(r);
      json again = to_json(na_report_from_json(json::parse(j.dump())));
      CHECK(again == j);
    }
  }

  TEST_CASE("suite cases and traces round trip") {
    auto cases = run_suite("cu", 3, 2, 16);
    for (const auto& c : cases) {
      json j = to_json(c);
      CHECK(to_json(suite_case_from_json(json::parse(j.dump()))) == j);
    }
    ConvergenceTrace t{{16, 32}, {0.5, 0.75}, {1e-3, 1e-300}};
    CHECK(to_json(trace_from_json(json::parse(to_json(t).dump()))) == to_json(t));
  }

  TEST_CASE("envelope") {
    json cfg = {{"symbol", "z"}, {"N", 16}};
    ReportEnvelope e = make_envelope("decide", cfg, "na_report", json::object());
    CHECK(e.config_hash.size() == 16);
    CHECK(e.config_hash == config_hash(cfg));
    CHECK(config_hash(json{{"N", 17}}) != config_hash(json{{"N", 16}}));
    CHECK(config_hash(json{{"N", 16}}) == "74acf0d3093c8f24");
    CHECK(e.timestamp.size() == 20);
    CHECK(e.timestamp.back() == 'Z');
    json j = to_json(e);
    CHECK(to_json(envelope_from_json(json::parse(j.dump()))) == j);
  }

  TEST_CASE("atomic write replaces the file") {
    auto dir = std::filesystem::temp_directory_path() / "hardy_report_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "r.json").string();
    write_atomic(path, "first");
    write_atomic(path, "second");
    std::ifstream in(path);
    std::string s;
    in >> s;
    CHECK(s == "second");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
  }
}
