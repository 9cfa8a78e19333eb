#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsx/exactlin.hpp"

using namespace hsx;

TEST_CASE("bareiss leading minors") {
  MinorScan s = bareiss_leading_minors({{2, 1}, {1, 3}});
  CHECK(s.all_positive);
  CHECK(s.minors == std::vector<Int>{2, 5});

  MinorScan f = bareiss_leading_minors({{1, 2}, {2, 1}});
  CHECK_FALSE(f.all_positive);
  CHECK(f.first_bad == 2);
  CHECK(f.minors.back() == -3);

  // empty form is vacuously positive definite
  CHECK(bareiss_leading_minors({}).all_positive);
}

TEST_CASE("definiteness classification") {
  CHECK(classify_symmetric({{2, 0}, {0, 3}}).verdict == Definiteness::PositiveDefinite);
  CHECK(classify_symmetric({{1, 2}, {2, 1}}).verdict == Definiteness::Indefinite);
  CHECK(classify_symmetric({{-1}}).verdict == Definiteness::Indefinite);
  // zero diagonal with a nonzero partner takes negative values
  CHECK(classify_symmetric({{0, 1}, {1, 0}}).verdict == Definiteness::Indefinite);
  // singular but positive semidefinite: the inertia fallback decides
  auto deg = classify_symmetric({{1, 1}, {1, 1}});
  CHECK(deg.verdict == Definiteness::Degenerate);
  REQUIRE(deg.inertia.has_value());
  CHECK(deg.inertia->plus == 1);
  CHECK(deg.inertia->zero == 1);

  auto deg3 = classify_symmetric({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(deg3.verdict == Definiteness::Degenerate);
  // singular with a negative direction stays indefinite
  CHECK(classify_symmetric({{1, 2, 0}, {2, 1, 0}, {0, 0, 0}}).verdict ==
        Definiteness::Indefinite);
}

TEST_CASE("symmetric inertia handles hyperbolic blocks") {
  std::vector<std::vector<Rat>> h = {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  Inertia in = symmetric_inertia(h);
  CHECK(in.plus == 2);
  CHECK(in.minus == 2);
  CHECK(in.zero == 0);

  std::vector<std::vector<Rat>> z(3, std::vector<Rat>(3, Rat(0)));
  Inertia zi = symmetric_inertia(z);
  CHECK(zi.zero == 3);
}

TEST_CASE("determinant with pivoting") {
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}) == 4);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(determinant({}) == 1);
}
