#include "hsx/cohomology.hpp"

#include <algorithm>

#include "hsx/localize.hpp"
#include "hsx/parallel.hpp"

namespace hsx {

CohClass zero_class(int codim) {
  CohClass c;
  c.codim = codim;
  return c;
}

CohClass fundamental_class(const Space& X) {
  CohClass c;
  c.codim = 0;
  c.coeffs.emplace(X.stratum(0)[0], Int(1));
  return c;
}

CohClass point_class(const Space& X) {
  CohClass c;
  c.codim = X.dim();
  c.coeffs.emplace(X.stratum(X.dim())[0], Int(1));
  return c;
}

CohClass schubert_class(const Space& X, int rep) {
  CohClass c;
  c.codim = X.codim(rep);
  c.coeffs.emplace(rep, Int(1));
  return c;
}

void validate_class(const Space& X, const CohClass& c) {
  require(c.codim >= 0 && c.codim <= X.dim(), Errc::DegreeOutOfRange,
          "codim " + std::to_string(c.codim));
  for (const auto& [rep, coeff] : c.coeffs) {
    (void)coeff;
    require(rep >= 0 && rep < X.num_reps() && X.codim(rep) == c.codim, Errc::DegreeMismatch,
            "coefficient index outside the codim-" + std::to_string(c.codim) + " stratum");
  }
}

namespace {

// Dense Chevalley step: vector over stratum(d) -> vector over stratum(d+1).
std::vector<Int> h_step(const Space& X, int d, const std::vector<Int>& in) {
  const auto& src = X.stratum(d);
  const auto& dst = X.stratum(d + 1);
  std::vector<Int> out(dst.size());
  for (std::size_t p = 0; p < src.size(); ++p) {
    if (in[p] == 0) continue;
    for (const auto& [u, c] : X.chev(src[p])) {
      out[X.position_in_stratum(u)] += in[p] * c;
    }
  }
  return out;
}

std::vector<Int> dense_of(const Space& X, const CohClass& c) {
  const auto& basis = X.stratum(c.codim);
  std::vector<Int> v(basis.size());
  for (const auto& [rep, coeff] : c.coeffs) v[X.position_in_stratum(rep)] = coeff;
  return v;
}

CohClass class_of(const Space& X, int codim, const std::vector<Int>& v) {
  CohClass c;
  c.codim = codim;
  const auto& basis = X.stratum(codim);
  for (std::size_t p = 0; p < basis.size(); ++p)
    if (v[p] != 0) c.coeffs.emplace(basis[p], v[p]);
  return c;
}

Int dense_pair(const Space& X, int codim_a, const std::vector<Int>& a, const std::vector<Int>& b) {
  // <a, b> with codim_a + codim_b = dim: sum over w of a(w) b(dual w).
  const auto& basis = X.stratum(codim_a);
  Int s = 0;
  for (std::size_t p = 0; p < basis.size(); ++p) {
    if (a[p] == 0) continue;
    const Int& bc = b[X.position_in_stratum(X.dual(basis[p]))];
    if (bc != 0) s += a[p] * bc;
  }
  return s;
}

}  // namespace

CohClass chevalley_h_mult(const Space& X, const CohClass& c) {
  require(X.picard_rank_one(), Errc::NotPicardRankOne, X.descriptor());
  validate_class(X, c);
  require(c.codim < X.dim(), Errc::TopDegree, "cannot multiply a top-degree class by h");
  return class_of(X, c.codim + 1, h_step(X, c.codim, dense_of(X, c)));
}

CohClass h_power(const Space& X, int k) {
  require(X.picard_rank_one(), Errc::NotPicardRankOne, X.descriptor());
  require(k >= 0 && k <= X.dim(), Errc::DegreeOutOfRange, "h^" + std::to_string(k));
  return h_mult_power(X, fundamental_class(X), k);
}

CohClass h_mult_power(const Space& X, CohClass c, int k) {
  require(c.codim + k <= X.dim(), Errc::DegreeOutOfRange, "power escapes the top degree");
  std::vector<Int> v = dense_of(X, c);
  for (int j = 0; j < k; ++j) v = h_step(X, c.codim + j, v);
  return class_of(X, c.codim + k, v);
}

Int pair_complementary(const Space& X, const CohClass& a, const CohClass& b) {
  validate_class(X, a);
  validate_class(X, b);
  require(a.codim + b.codim == X.dim(), Errc::DegreeMismatch,
          "codims " + std::to_string(a.codim) + "+" + std::to_string(b.codim) + " != dim");
  Int s = 0;
  for (const auto& [rep, ca] : a.coeffs) {
    auto it = b.coeffs.find(X.dual(rep));
    if (it != b.coeffs.end()) s += ca * it->second;
  }
  return s;
}

GramReport gram_matrix(const Space& X, int k) {
  require(X.picard_rank_one(), Errc::NotPicardRankOne, X.descriptor());
  require(k >= 0 && k <= X.dim(), Errc::DegreeOutOfRange, "k = " + std::to_string(k));
  require((X.dim() - k) % 2 == 0, Errc::ParityError,
          "dim - k odd: no middle stratum for k = " + std::to_string(k));

  GramReport rep;
  rep.k = k;
  rep.stratum_codim = (X.dim() - k) / 2;
  rep.basis = X.stratum(rep.stratum_codim);
  int m = rep.stratum_codim;
  int nb = static_cast<int>(rep.basis.size());
  int b = k / 2, a = k - b;

  // flows h^b sigma_i for the whole stratum, then one extra step per row
  // when k is odd; entry (i,j) = <h^a sigma_i, h^b sigma_j>.
  std::vector<std::vector<Int>> flow_b(nb);
  parallel_for(nb, [&](int i) {
    std::vector<Int> v(nb, Int(0));
    v[i] = 1;
    for (int j = 0; j < b; ++j) v = h_step(X, m + j, v);
    flow_b[i] = std::move(v);
  });

  rep.matrix.assign(nb, std::vector<Int>(nb));
  parallel_for(nb, [&](int i) {
    std::vector<Int> ai = flow_b[i];
    if (a != b) ai = h_step(X, m + b, ai);
    for (int j = 0; j < nb; ++j) rep.matrix[i][j] = dense_pair(X, m + a, ai, flow_b[j]);
  });

  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      require(rep.matrix[i][j] == rep.matrix[j][i], Errc::CrossCheckFailed,
              "Gram matrix is not symmetric");

  auto cls = classify_symmetric(rep.matrix);
  rep.verdict = cls.verdict;
  rep.witness = cls.scan.first_bad;
  return rep;
}

EffReport eff(const Space& X) {
  require(X.picard_rank_one(), Errc::NotPicardRankOne, X.descriptor());
  EffReport out;
  for (int k = X.dim() % 2; k <= X.dim(); k += 2) {
    out.reports.push_back(gram_matrix(X, k));
    if (out.reports.back().verdict == Definiteness::PositiveDefinite) {
      out.eff = k;
      out.coeff = X.dim() - k;
      return out;
    }
  }
  // k = dim is the 1x1 matrix [deg X] with deg X > 0, so this is unreachable;
  // keep a hard failure rather than an invented answer.
  fail(Errc::PosdefFailed, "no positive definite power found up to k = dim");
}

bool is_cumbersome(const Space& X, const CohClass& c) {
  validate_class(X, c);
  for (const auto& [rep, coeff] : c.coeffs) {
    (void)rep;
    require(coeff >= 0, Errc::NegativeCoefficient, "cumbersome test needs an effective class");
  }
  for (int rep : X.stratum(c.codim)) {
    auto it = c.coeffs.find(rep);
    if (it == c.coeffs.end() || it->second <= 0) return false;
  }
  return true;
}

GramReport bilinear_form_xi(const Space& X, const CohClass& xi) {
  validate_class(X, xi);
  require(X.rs().rank <= 4 || X.num_reps() <= 300, Errc::CostGuardExceeded,
          "triple products via localization are guarded to rank <= 4 or |W^P| <= 300");
  require((X.dim() - xi.codim) % 2 == 0, Errc::ParityError, "dim - deg(xi) must be even");

  GramReport rep;
  rep.k = xi.codim;
  rep.stratum_codim = (X.dim() - xi.codim) / 2;
  rep.basis = X.stratum(rep.stratum_codim);
  int nb = static_cast<int>(rep.basis.size());
  EvalPoint pt = make_eval_point(X.rs(), 20240229ull);

  rep.matrix.assign(nb, std::vector<Int>(nb));
  parallel_for(nb, [&](int i) {
    for (int j = i; j < nb; ++j) {
      Int s = 0;
      for (const auto& [t, c] : xi.coeffs) s += c * integrate(X, {rep.basis[i], rep.basis[j], t}, pt);
      rep.matrix[i][j] = s;
    }
  });
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < i; ++j) rep.matrix[i][j] = rep.matrix[j][i];

  auto cls = classify_symmetric(rep.matrix);
  rep.verdict = cls.verdict;
  rep.witness = cls.scan.first_bad;
  return rep;
}

}  // namespace hsx
