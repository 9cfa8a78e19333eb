#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hsx/localize.hpp"

using namespace hsx;

namespace {
const EvalPoint& pt_for(const Space& X) {
  static std::map<std::string, EvalPoint> cache;
  auto it = cache.find(X.descriptor());
  if (it == cache.end()) it = cache.emplace(X.descriptor(), make_eval_point(X.rs(), 987654321ull)).first;
  return it->second;
}
}  // namespace

TEST_CASE("evaluation points are regular and distinct") {
  RootSystem rs = build_root_system('F', 4);
  EvalPoint pt = make_eval_point(rs, 42);
  CHECK(pt.primary != pt.secondary);
  for (const IVec& r : rs.pos_roots) {
    Rat a = 0, b = 0;
    for (int i = 0; i < rs.rank; ++i) {
      a += Rat(r[i]) * pt.primary[i];
      b += Rat(r[i]) * pt.secondary[i];
    }
    CHECK(a != 0);
    CHECK(b != 0);
  }
}

TEST_CASE("billey restriction basics") {
  Space X(build_root_system('A', 2), {1, 2});  // full flag variety of A2
  const EvalPoint& pt = pt_for(X);
  int e = 0;
  REQUIRE(X.rep_length(e) == 0);
  for (int v = 0; v < X.num_reps(); ++v) CHECK(billey_restriction(X, e, v, pt.primary) == 1);

  int s1 = X.rep_from_word({1});
  // w = v = s1: single subword, single rotated root alpha_1
  CHECK(billey_restriction(X, s1, s1, pt.primary) == pt.primary[0]);
  // support condition
  int s2 = X.rep_from_word({2});
  CHECK(billey_restriction(X, s1, s2, pt.primary) == 0);
}

TEST_CASE("euler denominator on P^1") {
  Space X(build_root_system('A', 1), {1});
  const EvalPoint& pt = pt_for(X);
  // single tangent weight -alpha_1 at e, +alpha_1 at s1
  CHECK(euler_denominator(X, 0, pt.primary) == -pt.primary[0]);
  CHECK(euler_denominator(X, 1, pt.primary) == pt.primary[0]);
  // integral of the degree-0 class vanishes on a positive-dimensional space
  int fund = X.stratum(0)[0];
  CHECK(integrate(X, {fund}, pt) == 0);
}

TEST_CASE("point normalization on small spaces") {
  for (auto [s, n, node] : {std::tuple<char, int, int>{'A', 1, 1},
                            {'A', 2, 1},
                            {'A', 3, 2},
                            {'B', 2, 1},
                            {'B', 3, 2},
                            {'C', 3, 3},
                            {'G', 2, 1},
                            {'G', 2, 2}}) {
    Space X(build_root_system(s, n), {node});
    int point = X.stratum(X.dim())[0];
    CHECK(integrate(X, {point}, pt_for(X)) == 1);
  }
}

TEST_CASE("degrees: G(2,4) and the quadric threefold") {
  Space g24(build_root_system('A', 3), {2});
  int h = g24.hyperplane_rep();
  // deg G(2,n) is the Catalan number C_{n-2}; the elementary recurrence
  // C_m = sum C_i C_{m-1-i} is the independent count here.
  auto catalan = [](int m) {
    std::vector<long long> c(m + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= m; ++k)
      for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
    return c[m];
  };
  CHECK(integrate(g24, {h, h, h, h}, pt_for(g24)) == catalan(2));

  Space q3(build_root_system('B', 2), {1});
  int hq = q3.hyperplane_rep();
  CHECK(integrate(q3, {hq, hq, hq}, pt_for(q3)) == 2);
}

TEST_CASE("duality orthonormality on B3/P2, full matrix") {
  Space X(build_root_system('B', 3), {2});
  const EvalPoint& pt = pt_for(X);
  for (int u = 0; u < X.num_reps(); ++u)
    for (int v = 0; v < X.num_reps(); ++v) {
      if (X.rep_length(u) != X.rep_length(v)) continue;
      Int got = integrate(X, {u, X.dual(v)}, pt);
      CHECK(got == (u == v ? 1 : 0));
    }
}

TEST_CASE("integrate is symmetric in its factors") {
  Space X(build_root_system('B', 3), {2});
  const EvalPoint& pt = pt_for(X);
  int h = X.hyperplane_rep();
  int c2 = X.stratum(2)[0];
  int c4 = X.stratum(4)[1];
  std::vector<int> f{h, c2, c4};
  Int base = integrate(X, f, pt);
  std::sort(f.begin(), f.end());
  do {
    CHECK(integrate(X, f, pt) == base);
  } while (std::next_permutation(f.begin(), f.end()));
}

TEST_CASE("degree mismatch returns zero without summation") {
  Space X(build_root_system('A', 3), {2});
  int h = X.hyperplane_rep();
  CHECK(integrate(X, {h, h}, pt_for(X)) == 0);
  CHECK(integrate(X, {h, h, h, h, h}, pt_for(X)) == 0);
}

TEST_CASE("symbolic third check at small rank") {
  Space p2(build_root_system('A', 2), {1});
  int point = p2.stratum(p2.dim())[0];
  int h = p2.hyperplane_rep();
  CHECK(integral_matches_symbolic(p2, {point}, 1));
  CHECK(integral_matches_symbolic(p2, {h, h}, 1));

  Space q3(build_root_system('B', 2), {1});
  int hq = q3.hyperplane_rep();
  CHECK(integral_matches_symbolic(q3, {hq, hq, hq}, 2));
  CHECK_FALSE(integral_matches_symbolic(q3, {hq, hq, hq}, 3));

  Space g2(build_root_system('G', 2), {1});
  int pt_g = g2.stratum(g2.dim())[0];
  CHECK(integral_matches_symbolic(g2, {pt_g}, 1));
}
