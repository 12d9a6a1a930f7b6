#include <string>

#include "doctest.h"
#include "qsym/errors.hpp"
#include "qsym/qbernoulli.hpp"
#include "qsym/serialize.hpp"
#include "test_support.hpp"

using qsym::Json;
using qsym::LaurentPoly;
using qsym::Rational;
using qsym::RatFun;

TEST_CASE("LaurentPoly JSON layout") {
  const LaurentPoly p = LaurentPoly::from_terms({{-1, Rational(1, 2)}, {3, Rational(-4)}});
  CHECK(qsym::to_json(p).dump() == R"([[-1,"1/2"],[3,"-4"]])");
  CHECK(qsym::to_json(LaurentPoly()).dump() == "[]");
  CHECK(qsym::laurent_from_json(qsym::to_json(p)) == p);
  CHECK(qsym::laurent_from_json(Json::parse(R"([[0, 2], [1, "3/6"]])")) ==
        LaurentPoly::from_terms({{0, Rational(2)}, {1, Rational(1, 2)}}));
  CHECK_THROWS_AS(qsym::laurent_from_json(Json::parse(R"({"a":1})")), qsym::DomainError);
  CHECK_THROWS_AS(qsym::laurent_from_json(Json::parse(R"([[0]])")), qsym::DomainError);
  CHECK_THROWS_AS(qsym::laurent_from_json(Json::parse(R"([[0, "x/2"]])")), qsym::DomainError);
}

TEST_CASE("RatFun JSON layout") {
  const RatFun b1 = qsym::beta_number(1);
  CHECK(qsym::to_json(b1).dump() == R"({"num":[[0,"-1"]],"den":[[0,"1"],[1,"1"]]})");
  CHECK(qsym::to_json(RatFun(1)).dump() == R"({"num":[[0,"1"]],"den":[[0,"1"]]})");
  CHECK_THROWS_AS(qsym::ratfun_from_json(Json::parse(R"({"num":[[0,"1"]],"den":[]})")), qsym::DivisionByZero);
  CHECK_THROWS_AS(qsym::ratfun_from_json(Json::parse(R"({"num":[]})")), qsym::DomainError);
}

TEST_CASE("RatFun JSON round trip") {
  auto gen = qsym_test::rng(11);
  for (int k = 0; k < 200; ++k) {
    const RatFun f = qsym_test::random_ratfun(gen);
    const Json j = qsym::to_json(f);
    const RatFun back = qsym::ratfun_from_json(j);
    CHECK(back == f);
    CHECK(qsym::to_json(back) == j);
  }
  for (int n = 0; n <= 8; ++n) {
    const RatFun b = qsym::beta_higher({n, 2, qsym::BaseExp(2), 3});
    CHECK(qsym::ratfun_from_json(Json::parse(qsym::to_json(b).dump())) == b);
  }
}

TEST_CASE("CheckReport lines") {
  const auto ok = qsym::check_recurrence(2);
  CHECK(qsym::to_json(ok).dump() == R"({"identity":"recurrence","params":{"n":2},"holds":true})");
  const auto thm = qsym::check_thm5(1, 2, 1, 2, 1, 0);
  CHECK(qsym::to_json(thm).dump() ==
        R"({"identity":"thm5","params":{"n":1,"r":1,"h":2,"w1":2,"w2":1,"x":0},"holds":true})");
  const Json verbose = qsym::to_json(ok, true);
  CHECK(verbose.contains("lhs"));
  CHECK(qsym::ratfun_from_json(verbose["lhs"]).is_zero());

  qsym::CheckReport bad = ok;
  bad.holds = false;
  bad.lhs = RatFun(1);
  const Json j = qsym::to_json(bad);
  CHECK(j["holds"] == false);
  CHECK(qsym::ratfun_from_json(j["lhs"]) == RatFun(1));
  CHECK(qsym::ratfun_from_json(j["rhs"]) == ok.rhs);
}

TEST_CASE("ConvergenceReport layout") {
  const auto zero = qsym::convergence_report(qsym::Family::multi, {0, 2, 1, 0}, qsym::PadicContext(3, 2));
  const Json j = qsym::to_json(zero);
  CHECK(j["family"] == "multi");
  CHECK(j["p"] == 3);
  CHECK(j["q0"] == "4");
  CHECK(j["points"].dump() == R"([[1,"inf"],[2,"inf"]])");
  CHECK(j["monotone"] == true);
  CHECK_FALSE(j["params"].contains("h"));

  const auto w = qsym::convergence_report(qsym::Family::weighted, {1, 1, 2, 0}, qsym::PadicContext(3, 2));
  const Json jw = qsym::to_json(w);
  CHECK(jw["params"]["h"] == 2);
  CHECK(jw["points"][0][1].is_number_integer());
}
