#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hsx/report_io.hpp"

using namespace hsx;

TEST_CASE("class json round trip is bit exact") {
  Space X(build_root_system('B', 3), {2});
  std::mt19937_64 gen(321);
  for (int iter = 0; iter < 20; ++iter) {
    int codim = static_cast<int>(gen() % (X.dim() + 1));
    CohClass c = zero_class(codim);
    for (int rep : X.stratum(codim)) {
      if (gen() % 2) continue;
      // include coefficients far beyond 64 bits
      Int v = Int(gen()) * Int(gen()) * Int(gen()) + 1;
      c.coeffs.emplace(rep, v);
    }
    Json j = class_to_json(X, c);
    std::string s = j.dump();
    CohClass back = class_from_json(X, Json::parse(s));
    CHECK(back.codim == c.codim);
    CHECK(back.coeffs == c.coeffs);
    CHECK(class_to_json(X, back).dump() == s);
  }
}

TEST_CASE("class json rejects mismatched degree") {
  Space X(build_root_system('A', 3), {2});
  Json j;
  j["codim"] = 2;
  j["coeffs"] = Json::array({Json{{"word", X.rep_word(X.hyperplane_rep())}, {"coeff", "1"}}});
  CHECK_THROWS_AS(class_from_json(X, j), Error);
}

TEST_CASE("space description") {
  Space X(build_root_system('E', 6), {1});
  Json j = space_describe_json(X);
  CHECK(j["dim"] == 16);
  CHECK(j["classes"] == 27);
  CHECK(j["strata"][8] == 3);
}

TEST_CASE("eff table rows cover the asserted families") {
  const auto& rows = eff_table_rows();
  int big = 0;
  for (const auto& r : rows) big += r.big;
  CHECK(big == 6);
  CHECK(rows.size() >= 30);
}

TEST_CASE("determinism: identical inputs produce identical bytes") {
  Space X(build_root_system('C', 3), {2});
  EffReport r1 = eff(X);
  EffReport r2 = eff(X);
  CHECK(eff_to_json(X, r1).dump() == eff_to_json(X, r2).dump());

  AdjointModel m(build_root_system('F', 4), AdjointKind::Adjoint);
  CHECK(posdef_to_json(check_posdef(m, 25, 99)).dump() ==
        posdef_to_json(check_posdef(m, 25, 99)).dump());
}
