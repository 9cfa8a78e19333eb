#pragma once

// Fraction-free exact linear algebra for the positive-definiteness verdicts.
//
// bareiss_leading_minors runs one-step Bareiss elimination without pivoting;
// the pivot after step k equals the k-th leading principal minor, so the scan
// stops at the first nonpositive one.  classify_symmetric then settles the
// verdict: Sylvester for positive definite, a negative leading minor after
// positive ones certifies an indefinite form, and the rare zero-minor cases
// fall back to an exact LDL^T inertia count with symmetric pivoting.

#include <optional>
#include <vector>

#include "hsx/numeric.hpp"

namespace hsx {

using IMat = std::vector<std::vector<Int>>;

enum class Definiteness { PositiveDefinite, Degenerate, Indefinite };

const char* definiteness_name(Definiteness d);

struct MinorScan {
  std::vector<Int> minors;  // leading principal minors, up to the first <= 0
  bool all_positive = false;
  int first_bad = 0;  // 1-based index of the first nonpositive minor, 0 if none
};

MinorScan bareiss_leading_minors(const IMat& m);

// Exact inertia (n_plus, n_minus, n_zero) of a symmetric rational matrix.
struct Inertia {
  int plus = 0, minus = 0, zero = 0;
};
Inertia symmetric_inertia(std::vector<std::vector<Rat>> m);

struct DefinitenessReport {
  Definiteness verdict = Definiteness::Indefinite;
  MinorScan scan;
  std::optional<Inertia> inertia;  // present when the fallback ran
};

DefinitenessReport classify_symmetric(const IMat& m);

Int determinant(const IMat& m);  // Bareiss with row pivoting

}  // namespace hsx
