#include "hsx/localize.hpp"

#include <random>
#include <unordered_map>

namespace hsx {

namespace {

// alpha_i -> the i-th prime in the primary assignment
std::vector<int> first_primes(int n) {
  std::vector<int> out;
  for (int c = 2; static_cast<int>(out.size()) < n; ++c) {
    bool prime = true;
    for (int p : out) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(c);
  }
  return out;
}

Rat eval_root(const RootSystem& rs, const IVec& root, const std::vector<Rat>& pt) {
  Rat s = 0;
  for (int i = 0; i < rs.rank; ++i)
    if (root[i]) s += Rat(root[i]) * pt[i];
  return s;
}

Poly root_as_poly(const RootSystem& rs, const IVec& root) {
  Poly p(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    if (root[i]) p = p + Poly::monomial(rs.rank, i, 1, Rat(root[i]));
  return p;
}

// r(j) = s_{i1}...s_{i_{j-1}}(alpha_{ij}) along a reduced word; these are the
// inversions of v^{-1} in word order, all positive roots.
std::vector<IVec> prefix_roots(const RootSystem& rs, const std::vector<int>& word) {
  std::vector<IVec> out;
  out.reserve(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    IVec r(rs.rank, 0);
    r[word[j] - 1] = 1;
    for (std::size_t t = j; t-- > 0;) rs.reflect_root(word[t], r);
    out.push_back(std::move(r));
  }
  return out;
}

// Subword dynamic program behind Billey's formula.  States are the group
// elements formed by the reduced subwords consumed so far; each carries its
// action matrix on simple-root coordinates so that right multiplication and
// the reducedness test u(alpha_i) > 0 stay cheap.
template <typename Value, typename RootValue>
Value billey_dp(const RootSystem& rs, const std::vector<int>& word, const std::vector<IVec>& roots,
                const IVec& target_canon, int target_len, const RootValue& root_value,
                const Value& zero, const Value& one) {
  int n = rs.rank;
  struct State {
    std::vector<int> mat;
    Value val;
    int len;
  };
  std::unordered_map<IVec, State, IVecHash> cur;
  {
    std::vector<int> id(n * n, 0);
    for (int k = 0; k < n; ++k) id[k * n + k] = 1;
    cur.emplace(IVec(n, 1), State{std::move(id), one, 0});
  }

  std::unordered_map<IVec, State, IVecHash> nxt;
  for (std::size_t j = 0; j < word.size(); ++j) {
    int i = word[j] - 1;
    int remaining = static_cast<int>(word.size() - j);
    Value rv = root_value(roots[j]);
    nxt.clear();
    nxt.reserve(cur.size() * 2);
    for (auto& [canon, st] : cur) {
      if (st.len + remaining < target_len) continue;  // cannot reach the target
      // keep the letter unused
      auto keep = nxt.find(canon);
      if (keep == nxt.end())
        nxt.emplace(canon, st);
      else
        keep->second.val = keep->second.val + st.val;
      if (st.len == target_len) continue;
      // use the letter when the product stays reduced: u(alpha_i) > 0,
      // read off column i of the action matrix
      bool positive = true, nonzero = false;
      for (int r = 0; r < n; ++r) {
        int c = st.mat[r * n + i];
        if (c < 0) {
          positive = false;
          break;
        }
        if (c > 0) nonzero = true;
      }
      if (!positive || !nonzero) continue;
      // canonical(u s_i) = u(rho) - u(alpha_i), converted to weight coordinates
      IVec grown = canon;
      for (int r = 0; r < n; ++r) {
        long long s = 0;
        for (int c2 = 0; c2 < n; ++c2) s += rs.cartan[r][c2] * st.mat[c2 * n + i];
        grown[r] -= s;
      }
      Value contrib = st.val * rv;
      auto it = nxt.find(grown);
      if (it != nxt.end()) {
        it->second.val = it->second.val + contrib;
        continue;
      }
      // (U S_i) has columns U_j - a_{ij} U_i, a = Cartan row i
      std::vector<int> m = st.mat;
      for (int jj = 0; jj < n; ++jj) {
        int a = rs.cartan[i][jj];
        if (!a) continue;
        for (int r = 0; r < n; ++r) m[r * n + jj] -= a * st.mat[r * n + i];
      }
      nxt.emplace(std::move(grown), State{std::move(m), std::move(contrib), st.len + 1});
    }
    cur.swap(nxt);
  }
  auto f = cur.find(target_canon);
  return f == cur.end() ? zero : f->second.val;
}

bool root_outside_levi(const Space& X, int root_idx) {
  for (int i : X.parabolic_nodes())
    if (X.rs().pos_roots[root_idx][i - 1] != 0) return true;
  return false;
}

template <typename Value, typename RootValue>
Value euler_class(const Space& X, int v, const RootValue& root_value, Value p) {
  const RootSystem& rs = X.rs();
  WeylElement w = X.rep_element(v);
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (!root_outside_levi(X, k)) continue;
    IVec neg = rs.pos_roots[k];
    for (auto& c : neg) c = -c;
    p = p * root_value(act_on_root(rs, w, neg));
  }
  return p;
}

Rat integrate_at(const Space& X, const std::vector<int>& taus, const std::vector<Rat>& point) {
  const RootSystem& rs = X.rs();
  Rat total = 0;
  auto rv = [&](const IVec& r) { return eval_root(rs, r, point); };
  for (int v = 0; v < X.num_reps(); ++v) {
    std::vector<IVec> roots;  // prefix roots of v's word, shared by the factors
    Rat prod = 1;
    bool dead = false;
    for (int t : taus) {
      if (X.rep_length(t) > X.rep_length(v) || !X.leq(t, v)) {
        dead = true;
        break;
      }
      if (roots.empty()) roots = prefix_roots(rs, X.rep_word(v));
      Rat r = billey_dp<Rat>(rs, X.rep_word(v), roots, X.rep_canonical(t), X.rep_length(t), rv,
                             Rat(0), Rat(1));
      if (r == 0) {
        dead = true;
        break;
      }
      prod *= r;
    }
    if (dead) continue;
    Rat den = euler_class<Rat>(X, v, rv, Rat(1));
    require(den != 0, Errc::IrregularPoint, "euler class vanished");
    total += prod / den;
  }
  return total;
}

}  // namespace

EvalPoint make_eval_point(const RootSystem& rs, unsigned long long seed) {
  EvalPoint pt;
  pt.seed = seed;
  for (int p : first_primes(rs.rank)) pt.primary.emplace_back(p);
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dist(1, 1000);
  for (int i = 0; i < rs.rank; ++i) pt.secondary.emplace_back(Rat(dist(gen), dist(gen)));
  if (pt.secondary == pt.primary) pt.secondary[0] += 1;
  return pt;
}

Rat billey_restriction(const Space& X, int w, int v, const std::vector<Rat>& point) {
  const RootSystem& rs = X.rs();
  if (X.rep_length(w) > X.rep_length(v) || !X.leq(w, v)) return 0;
  auto rv = [&](const IVec& r) { return eval_root(rs, r, point); };
  return billey_dp<Rat>(rs, X.rep_word(v), prefix_roots(rs, X.rep_word(v)), X.rep_canonical(w),
                        X.rep_length(w), rv, Rat(0), Rat(1));
}

Rat euler_denominator(const Space& X, int v, const std::vector<Rat>& point) {
  auto rv = [&](const IVec& r) { return eval_root(X.rs(), r, point); };
  Rat p = euler_class<Rat>(X, v, rv, Rat(1));
  require(p != 0, Errc::IrregularPoint, "euler class vanished at evaluation point");
  return p;
}

Int integrate(const Space& X, const std::vector<int>& factors, const EvalPoint& pt) {
  long long total_codim = 0;
  for (int f : factors) total_codim += X.codim(f);
  if (total_codim != X.dim()) return 0;

  std::vector<int> taus;
  taus.reserve(factors.size());
  for (int f : factors) taus.push_back(X.dual(f));

  Rat a = integrate_at(X, taus, pt.primary);
  Rat b = integrate_at(X, taus, pt.secondary);
  require(a == b, Errc::PointCollision,
          "fixed-point sums disagree between evaluation points; re-randomize the seed");
  require(denominator(a) == 1, Errc::PointCollision, "non-integral localization sum");
  return numerator(a);
}

bool integral_matches_symbolic(const Space& X, const std::vector<int>& factors, const Int& expected) {
  const RootSystem& rs = X.rs();
  long long total_codim = 0;
  for (int f : factors) total_codim += X.codim(f);
  if (total_codim != X.dim()) return expected == 0;

  auto rv = [&](const IVec& r) { return root_as_poly(rs, r); };
  RationalFn acc(rs.rank);
  acc.num = Poly(rs.rank);  // 0/1
  for (int v = 0; v < X.num_reps(); ++v) {
    Poly prod = Poly::constant(rs.rank, 1);
    bool dead = false;
    for (int f : factors) {
      int t = X.dual(f);
      if (X.rep_length(t) > X.rep_length(v) || !X.leq(t, v)) {
        dead = true;
        break;
      }
      Poly r = billey_dp<Poly>(rs, X.rep_word(v), prefix_roots(rs, X.rep_word(v)),
                               X.rep_canonical(t), X.rep_length(t), rv, Poly(rs.rank),
                               Poly::constant(rs.rank, 1));
      if (r.is_zero()) {
        dead = true;
        break;
      }
      prod = prod * r;
    }
    if (dead) continue;
    Poly den = euler_class<Poly>(X, v, rv, Poly::constant(rs.rank, 1));
    acc = acc + RationalFn(std::move(prod), std::move(den));
  }
  Poly want = acc.den * Rat(expected);
  return acc.num == want;
}

}  // namespace hsx
