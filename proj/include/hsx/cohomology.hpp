#pragma once

// Schubert-basis cohomology of G/P with Picard rank one: multiplication by
// the hyperplane class h (Chevalley formula), the Poincare pairing, Gram
// matrices of ( , )_{h^k}, the effectiveness invariant, and cumbersomeness.
//
// sigma(w) denotes the class of X^P(w); it has codimension dim - l(w).
// A Gram entry (sigma, sigma')_{h^k} is evaluated as the complementary
// pairing of h^a sigma against h^b sigma' with a + b = k split around the
// middle, which halves the Chevalley depth per class.

#include <map>
#include <optional>
#include <vector>

#include "hsx/exactlin.hpp"
#include "hsx/space.hpp"

namespace hsx {

struct CohClass {
  int codim = 0;
  std::map<int, Int> coeffs;  // rep index -> coefficient; reps must live in stratum(codim)
};

CohClass zero_class(int codim);
CohClass fundamental_class(const Space& X);
CohClass point_class(const Space& X);
CohClass schubert_class(const Space& X, int rep);

void validate_class(const Space& X, const CohClass& c);

CohClass chevalley_h_mult(const Space& X, const CohClass& c);
CohClass h_power(const Space& X, int k);
CohClass h_mult_power(const Space& X, CohClass c, int k);

Int pair_complementary(const Space& X, const CohClass& a, const CohClass& b);

struct GramReport {
  int k = 0;
  int stratum_codim = 0;
  std::vector<int> basis;  // rep indices of the middle stratum
  IMat matrix;
  Definiteness verdict = Definiteness::Indefinite;
  int witness = 0;  // failing leading principal minor index (1-based), 0 if none
};

GramReport gram_matrix(const Space& X, int k);

struct EffReport {
  int eff = -1;
  int coeff = -1;
  std::vector<GramReport> reports;  // every scanned k, in order
};

EffReport eff(const Space& X);

bool is_cumbersome(const Space& X, const CohClass& c);

// Gram matrix of ( , )_xi on the middle stratum, entries computed as genuine
// triple products through localization.
GramReport bilinear_form_xi(const Space& X, const CohClass& xi);

}  // namespace hsx
