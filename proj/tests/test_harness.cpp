#include "doctest.h"
#include "hardy/errors.hpp"
#include "hardy/harness.hpp"
#include "hardy/report.hpp"

using namespace hardy;

TEST_SUITE("harness") {
  TEST_CASE("suites are deterministic and self-consistent") {
    for (const auto& id : suite_ids()) {
      auto a = run_suite(id, 99, 3, 32);
      auto b = run_suite(id, 99, 3, 32);
      REQUIRE(a.size() == 3);
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(to_json(a[k]).dump() == to_json(b[k]).dump());
        CHECK(a[k].pass == a[k].recompute_pass());
        CHECK_MESSAGE(a[k].pass, id);
        for (const auto& [name, r] : a[k].residuals) CHECK(a[k].thresholds.count(name) == 1);
      }
    }
  }

  TEST_CASE("cases carry their own seeds") {
    auto all = run_suite("block", 5, 4, 32);
    auto one = run_suite("block", 5, 3, 32);
    CHECK(to_json(all[2]).dump() == to_json(one[2]).dump());
  }

  TEST_CASE("a failing residual flips pass") {
    SuiteCase c;
    c.check("a", 1e-12, 1e-9);
    CHECK(c.pass);
    c.check("b", 1.0, 1e-9);
    CHECK_FALSE(c.pass);
    c.residuals["b"] = 0.0;
    CHECK(c.recompute_pass());
  }

  TEST_CASE("random generators respect their contracts") {
    auto g = case_rng(1, 0);
    for (int k = 0; k < 50; ++k) {
      BlaschkeProduct u = random_blaschke(g);
      CHECK(u.degree() >= 1);
      CHECK(u.degree() <= 4);
      CHECK(u.max_modulus() <= 0.8);
      FourierVector f = random_bandlimited(g, 8);
      CHECK(f.lo() == -8);
      double m = 0.0;
      for (int j = 0; j < 2048; ++j) m = std::max(m, std::abs(f.evaluate(kTwoPi * j / 2048)));
      CHECK(m == doctest::Approx(1.0));
    }
  }

  TEST_CASE("unknown ids") {
    CHECK_THROWS_AS(run_suite("nope", 1, 1, 16), UnknownSuite);
    CHECK_THROWS_AS(reproduce_example("nope"), UnknownExample);
  }
}
