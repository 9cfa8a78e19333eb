#include "hsx/exactlin.hpp"

#include "hsx/error.hpp"

namespace hsx {

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive_definite";
    case Definiteness::Degenerate: return "degenerate";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

MinorScan bareiss_leading_minors(const IMat& m0) {
  MinorScan out;
  IMat m = m0;
  int n = static_cast<int>(m.size());
  if (n == 0) {
    out.all_positive = true;  // empty form is vacuously positive definite
    return out;
  }
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    Int piv = m[k][k];
    out.minors.push_back(piv);
    if (piv <= 0) {
      out.first_bad = k + 1;
      return out;
    }
    if (k == n - 1) break;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = t / prev;  // exact by the Bareiss identity
      }
    prev = piv;
  }
  out.all_positive = true;
  return out;
}

Inertia symmetric_inertia(std::vector<std::vector<Rat>> m) {
  Inertia in;
  int n = static_cast<int>(m.size());
  int k = 0;
  while (k < n) {
    // symmetric pivoting: prefer a nonzero diagonal entry
    int p = -1;
    for (int i = k; i < n; ++i)
      if (m[i][i] != 0) {
        p = i;
        break;
      }
    if (p >= 0) {
      if (p != k) {
        std::swap(m[p], m[k]);
        for (int i = 0; i < n; ++i) std::swap(m[i][p], m[i][k]);
      }
      Rat piv = m[k][k];
      if (piv > 0)
        ++in.plus;
      else
        ++in.minus;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] == 0) continue;
        Rat f = m[i][k] / piv;
        for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        for (int j = k; j < n; ++j) m[j][i] = m[i][j];
      }
      ++k;
      continue;
    }
    // all remaining diagonal entries are zero
    int a = -1, b = -1;
    for (int i = k; i < n && a < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m[i][j] != 0) {
          a = i;
          b = j;
          break;
        }
    if (a < 0) {
      in.zero += n - k;
      break;
    }
    // hyperbolic 2x2 block [[0,c],[c,0]]: contributes one plus and one minus;
    // eliminate via the congruence that diagonalizes it.
    // Bring the block to rows/cols (k, k+1).
    auto swap_rc = [&](int i, int j) {
      if (i == j) return;
      std::swap(m[i], m[j]);
      for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
    };
    swap_rc(a, k);
    swap_rc(b == k ? a : b, k + 1);
    Rat c = m[k][k + 1];
    // rows k, k+1 clear the rest
    for (int i = k + 2; i < n; ++i) {
      Rat fi = m[i][k + 1] / c;  // kill column k via row k? use block inverse
      Rat gi = m[i][k] / c;
      // v -> v - (v_k/c) * row_{k+1} - (v_{k+1}/c) * row_k   (block [[0,c],[c,0]]^{-1})
      for (int j = k; j < n; ++j) m[i][j] -= gi * m[k + 1][j] + fi * m[k][j];
      for (int j = k; j < n; ++j) m[j][i] = m[i][j];
    }
    ++in.plus;
    ++in.minus;
    k += 2;
  }
  return in;
}

DefinitenessReport classify_symmetric(const IMat& m) {
  DefinitenessReport rep;
  int n = static_cast<int>(m.size());

  // Diagonal shortcuts: a negative diagonal entry, or a zero diagonal entry
  // with a nonzero off-diagonal partner, already exhibits a negative value.
  for (int i = 0; i < n; ++i) {
    if (m[i][i] < 0) {
      rep.verdict = Definiteness::Indefinite;
      rep.scan = bareiss_leading_minors(m);
      return rep;
    }
    if (m[i][i] == 0)
      for (int j = 0; j < n; ++j)
        if (j != i && m[i][j] != 0) {
          rep.verdict = Definiteness::Indefinite;
          rep.scan = bareiss_leading_minors(m);
          return rep;
        }
  }

  rep.scan = bareiss_leading_minors(m);
  if (rep.scan.all_positive) {
    rep.verdict = Definiteness::PositiveDefinite;
    return rep;
  }
  if (rep.scan.minors.back() < 0) {
    // Leading minors +,...,+,- : the leading block is nonsingular with a
    // negative pivot, so the form takes a negative value.
    rep.verdict = Definiteness::Indefinite;
    return rep;
  }
  // Zero leading minor with all-positive diagonal: decide by exact inertia.
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = Rat(m[i][j]);
  Inertia in = symmetric_inertia(std::move(q));
  rep.inertia = in;
  rep.verdict = in.minus > 0 ? Definiteness::Indefinite : Definiteness::Degenerate;
  return rep;
}

Int determinant(const IMat& m0) {
  IMat m = m0;
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace hsx
