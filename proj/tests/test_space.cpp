#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hsx/space.hpp"

using namespace hsx;

namespace {

Int levi_order(const RootSystem& rs, const std::set<int>& marked) {
  // orbit of rho under the unmarked reflections
  std::set<IVec> orbit;
  std::vector<IVec> queue{IVec(rs.rank, 1)};
  orbit.insert(queue[0]);
  while (!queue.empty()) {
    IVec v = queue.back();
    queue.pop_back();
    for (int i = 1; i <= rs.rank; ++i) {
      if (marked.count(i)) continue;
      IVec u = v;
      rs.reflect_weight(i, u);
      if (orbit.insert(u).second) queue.push_back(u);
    }
  }
  return Int(orbit.size());
}

}  // namespace

TEST_CASE("build_space basics") {
  Space g24(build_root_system('A', 3), {2});
  CHECK(g24.num_reps() == 6);
  CHECK(g24.dim() == 4);

  Space cayley(build_root_system('E', 6), {1});
  CHECK(cayley.num_reps() == 27);
  CHECK(cayley.dim() == 16);

  Space gq27(build_root_system('B', 3), {2});
  CHECK(gq27.num_reps() == 12);
  CHECK(gq27.dim() == 7);

  CHECK_THROWS_AS(Space(build_root_system('A', 2), {}), Error);
}

TEST_CASE("|W^P| * |W_P| = |W| for rank <= 4 spaces") {
  for (auto [s, n, node] : {std::tuple<char, int, int>{'A', 3, 2},
                            {'B', 3, 1},
                            {'B', 3, 2},
                            {'C', 3, 3},
                            {'D', 4, 2},
                            {'F', 4, 4},
                            {'G', 2, 1}}) {
    RootSystem rs = build_root_system(s, n);
    Space X(build_root_system(s, n), {node});
    CHECK(Int(X.num_reps()) * levi_order(rs, {node}) == weyl_order(rs));
  }
}

TEST_CASE("representatives are minimal in their coset") {
  Space X(build_root_system('B', 3), {2});
  const RootSystem& rs = X.rs();
  for (int i = 0; i < X.num_reps(); ++i) {
    WeylElement w = X.rep_element(i);
    // minimal <=> no right descent at an unmarked simple: w(alpha_j) > 0
    for (int j = 1; j <= rs.rank; ++j) {
      if (X.parabolic_nodes().count(j)) continue;
      IVec alpha(rs.rank, 0);
      alpha[j - 1] = 1;
      IVec img = act_on_root(rs, w, alpha);
      CHECK(std::all_of(img.begin(), img.end(), [](long long x) { return x >= 0; }));
    }
  }
}

TEST_CASE("strata") {
  Space g24(build_root_system('A', 3), {2});
  CHECK(g24.stratum(0).size() == 1);
  CHECK(g24.stratum(2).size() == 2);
  CHECK(g24.degree_strata(2).size() == 2);
  CHECK_THROWS_AS(g24.stratum(5), Error);

  Space cayley(build_root_system('E', 6), {1});
  CHECK(cayley.stratum(8).size() == 3);  // middle Betti number of the Cayley plane
  for (int d = 0; d <= cayley.dim(); ++d)
    CHECK(cayley.stratum(d).size() == cayley.stratum(cayley.dim() - d).size());

  // exactly one rep of length 0 and one of length dim
  for (auto [s, n, node] :
       {std::tuple<char, int, int>{'A', 3, 2}, {'B', 3, 2}, {'C', 3, 3}, {'G', 2, 1}}) {
    Space X(build_root_system(s, n), {node});
    CHECK(X.stratum(X.dim()).size() == 1);
    CHECK(X.stratum(0).size() == 1);
  }
}

TEST_CASE("poincare duality") {
  Space X(build_root_system('B', 3), {2});
  int point = X.stratum(X.dim())[0];
  int fund = X.stratum(0)[0];
  CHECK(X.dual(point) == fund);
  CHECK(X.dual(fund) == point);
  for (int i = 0; i < X.num_reps(); ++i) {
    CHECK(X.dual(X.dual(i)) == i);
    CHECK(X.rep_length(X.dual(i)) == X.dim() - X.rep_length(i));
  }

  // the two middle classes of G(2,4) are self-dual
  Space g24(build_root_system('A', 3), {2});
  for (int i : g24.stratum(2)) CHECK(g24.dual(i) == i);
}

TEST_CASE("stabilizer roots") {
  Space X(build_root_system('B', 3), {2});
  int e = 0;  // the point X^P(e)
  CHECK(X.rep_length(e) == 0);
  auto [stab_e, sigma_e] = X.stabilizer_roots(e);
  CHECK(sigma_e == std::set<int>{2});  // Sigma^P(e) = Sigma(P)
  int top = X.stratum(0)[0];           // the fundamental class
  auto [stab_top, sigma_top] = X.stabilizer_roots(top);
  CHECK(sigma_top.empty());  // the whole space is G-stable
  CHECK(stab_top.size() == 3);

  // on every rank <= 4 space: point <-> Sigma(P), fundamental <-> empty
  for (auto [s, n, node] : {std::tuple<char, int, int>{'A', 4, 2}, {'B', 4, 2}, {'C', 4, 3},
                            {'D', 4, 1}, {'F', 4, 4}, {'G', 2, 2}}) {
    Space Y(build_root_system(s, n), {node});
    CHECK(Y.stabilizer_roots(0).second == std::set<int>{node});
    CHECK(Y.stabilizer_roots(Y.stratum(0)[0]).second.empty());
  }
}

TEST_CASE("parabolic span") {
  Space X(build_root_system('B', 3), {2});
  std::set<int> all{1, 2, 3};
  int top = X.stratum(0)[0];
  for (int v = 0; v < X.num_reps(); ++v) {
    CHECK(X.parabolic_span(all, v) == v);  // Q = B: no Levi reflections
    CHECK(X.parabolic_span({}, v) == top);  // Q = G
  }
  // monotone and idempotent
  std::set<int> q{2};
  for (int v = 0; v < X.num_reps(); ++v) {
    int s = X.parabolic_span(q, v);
    CHECK(X.leq(v, s));
    CHECK(X.parabolic_span(q, s) == s);
    for (int u = 0; u < X.num_reps(); ++u)
      if (X.leq(u, v)) CHECK(X.leq(X.parabolic_span(q, u), s));
  }
}

TEST_CASE("Cayley plane admissible pairs") {
  Space X(build_root_system('E', 6), {1});
  int w1 = X.rep_from_word({1, 3, 4, 2, 6, 5, 4, 3, 1});
  int v1 = X.rep_from_word({1, 3, 4, 2, 5, 4, 3, 1});
  CHECK(X.rep_length(w1) == 9);
  CHECK(X.rep_length(v1) == 8);
  CHECK(X.is_admissible(v1, w1));

  int w2 = X.rep_from_word({5, 3, 4, 2, 6, 5, 4, 3, 1});
  int v2 = X.rep_from_word({5, 4, 2, 6, 5, 4, 3, 1});
  CHECK(X.rep_length(w2) == 9);
  CHECK(X.is_admissible(v2, w2));

  // the span computation reaches w exactly
  auto sigma_w1 = X.stabilizer_roots(w1).second;
  CHECK(X.parabolic_span(sigma_w1, v1) == w1);

  // fundamental class is admissible in itself
  int top = X.stratum(0)[0];
  CHECK(X.is_admissible(top, top));

  // v not below w is rejected as ill-posed
  CHECK_THROWS_AS(X.is_admissible(w1, v1), Error);
}

TEST_CASE("admissibility forces smaller length except at the top") {
  for (auto [s, n, node] : {std::tuple<char, int, int>{'B', 3, 2}, {'A', 3, 2}, {'G', 2, 1}}) {
    Space X(build_root_system(s, n), {node});
    int top = X.stratum(0)[0];
    for (int v = 0; v < X.num_reps(); ++v)
      for (int w = 0; w < X.num_reps(); ++w) {
        if (!X.leq(v, w)) continue;
        if (X.is_admissible(v, w) && !(v == top && w == top))
          CHECK(X.rep_length(v) < X.rep_length(w));
      }
  }
}

TEST_CASE("minimal generating Schubert varieties") {
  Space borel_b2(build_root_system('B', 2), {1, 2});
  auto mg = borel_b2.minimal_generating();
  CHECK(mg.size() == 2);
  for (const auto& t : mg) CHECK(t.length == 2);

  Space borel_a2(build_root_system('A', 2), {1, 2});
  CHECK(borel_a2.minimal_generating().size() == 2);

  Space single(build_root_system('B', 3), {2});
  auto mg1 = single.minimal_generating();
  CHECK(mg1.size() == 1);
  CHECK(mg1[0].length == 1);
}

TEST_CASE("covers connect adjacent strata") {
  Space X(build_root_system('B', 3), {2});
  for (int i = 0; i < X.num_reps(); ++i)
    for (int c : X.covers_down(i)) {
      CHECK(X.rep_length(c) == X.rep_length(i) - 1);
      CHECK(X.leq(c, i));
    }
  // every non-point rep covers something
  for (int i = 0; i < X.num_reps(); ++i)
    if (X.rep_length(i) > 0) CHECK_FALSE(X.covers_down(i).empty());
}

TEST_CASE("descriptor parsing") {
  Space X = space_from_descriptor("B3/P2");
  CHECK(X.num_reps() == 12);
  CHECK(X.descriptor() == "B3/P2");
  CHECK_THROWS_AS(space_from_descriptor("B3P2"), Error);
}
