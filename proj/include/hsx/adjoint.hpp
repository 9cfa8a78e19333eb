#pragma once

// Adjoint and coadjoint homogeneous spaces: the class <-> root dictionary and
// the quadratic-form machinery attached to their middle cohomology.
//
// For the defining dominant root R (highest root for adjoint, highest short
// root for coadjoint), every coset representative w carries the variety root
// w(R); the map is a bijection onto the roots of the relevant length, it is
// equivariant for left multiplication, and it computes stabilizers:
// Sigma^P(w) = { beta simple : <beta^vee, w(R)> > 0 }.  Model construction
// verifies both properties and aborts on any mismatch.
//
// Classes are labeled by roots through Poincare duality: the codimension-l(w)
// class labeled rho is sigma(dual(rep_of_root(rho))).  Under this dictionary
// the classes of codimension just below the middle carry the simple relevant
// roots, those just above carry their negatives, and the fundamental class
// and point carry R and -R.
//
// The symbolic layer works in 2n variables x_1..x_n, y_1..y_n (n = number of
// relevant simple roots) with doubled exponents, so sqrt(x) is exponent 1 and
// genuine x is exponent 2.  d_u always denotes the linear form
// sum_u' c(u,u') x_u' with c the {2,1,0} Chevalley table.

#include <optional>
#include <string>

#include "hsx/cohomology.hpp"
#include "hsx/poly.hpp"

namespace hsx {

enum class AdjointKind { Adjoint, Coadjoint };

const char* adjoint_kind_name(AdjointKind k);

class AdjointModel {
 public:
  AdjointModel(RootSystem rs, AdjointKind kind);

  const Space& space() const { return *space_; }
  AdjointKind kind() const { return kind_; }
  const IVec& defining_root() const { return defining_root_; }

  int n_rel() const { return static_cast<int>(rel_nodes_.size()); }
  const std::vector<int>& relevant_simples() const { return rel_nodes_; }

  const IVec& variety_root(int rep) const { return root_of_rep_[rep]; }
  int rep_of_root(const IVec& root) const;

  // Rep index whose sigma-class is the cohomology class labeled by the root.
  int class_rep_of_root(const IVec& root) const { return space().dual(rep_of_root(root)); }
  // Relevant simple root t (index into relevant_simples) with a sign.
  int class_rep_of_simple(int t, bool negative) const;

  // Dynkin edges among the relevant simple roots, as index pairs (s < t).
  const std::vector<std::pair<int, int>>& pair_set() const { return pairs_; }

  // {2,1,0} Chevalley values, cross-checked against the computed cohomology
  // of the model at construction time of the table (hard error on mismatch).
  int chevalley_coeff(int t, int t2) const;

  // d_t as exact linear forms in the x variables (doubled exponents).
  Poly d_form(int t) const;

  std::string descriptor() const;

 private:
  std::optional<Space> space_;
  AdjointKind kind_;
  IVec defining_root_;
  std::vector<IVec> root_of_rep_;
  std::unordered_map<IVec, int, IVecHash> rep_of_root_;
  std::vector<int> rel_nodes_;
  std::vector<std::pair<int, int>> pairs_;
  mutable std::vector<std::vector<int>> chev_checked_;  // lazily verified table

  void verify_chevalley_table() const;
};

AdjointModel build_adjoint_model(RootSystem rs, AdjointKind kind);

// ---- middle-cohomology data attached to an effective class Y ----

struct MiddleData {
  std::vector<Int> x;  // x_t = h [Y] sigma(class of -t)
  std::vector<Int> a;  // coefficients of [Y] h on the simple-root classes
  std::vector<Int> d;  // d_t = [Y] sigma(class of +t) h^2
};

// Requires codim(Y) = (dim-3)/2 and d = 1 (the normalized case); verifies
// x_t = a_t and d_t = sum c x exactly.
MiddleData middle_data(const AdjointModel& m, const CohClass& Y, int d = 1, bool strict = true);

// The natural choice Y = h^{(dim-3)/2}.
CohClass default_middle_class(const AdjointModel& m);

// ---- the quadratic forms ----

// q as a quadratic form in y over the rational function field in x:
// returns (q * D, D) with D = prod_t d_t, both polynomials (doubled exps).
struct SymbolicForm {
  Poly num;
  Poly den;
};
SymbolicForm q_form(const AdjointModel& m);
// Numeric x: the quadratic form in y alone (x must be positive).
Poly q_form(const AdjointModel& m, const std::vector<Rat>& x);

// Symmetric matrix of the quadratic form Q over the pair set: the displayed
// diagonal 1 - x_u/d_{u'} - x_{u'}/d_u, the displayed chain cross entries
// sqrt(x_{u1} x_{u2'})/d_{u1'}, and the branch-node cross entries forced by
// the three-term relation between the L coordinates (present only when the
// relevant Dynkin subdiagram branches).  Entries are c * sqrt(x_a x_b) with
// c a rational function in x.
struct QEntry {
  RationalFn coeff;
  int sqrt_a = -1, sqrt_b = -1;  // value = coeff * sqrt(x_a x_b); -1,-1 = rational
};
struct QMatrix {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<QEntry>> entries;
};
// literal = the displayed rule only (chain pattern); otherwise completed.
QMatrix q_matrix(const AdjointModel& m, bool literal = false);

// Rational matrix congruent to Q at a positive numeric x (scaling row/col p
// by sqrt(x_{u_p} x_{u_p'}) clears every radical); same definiteness.
std::vector<std::vector<Rat>> q_matrix_congruent(const AdjointModel& m, const std::vector<Rat>& x,
                                                 bool literal = false);

struct QIdentityReport {
  bool completed_ok = false;   // q == Q(L) with the completed matrix
  bool literal_ok = false;     // q == Q(L) with the displayed entries only
  bool q_equals_qprime = false;
  std::string difference;      // canonicalized q - Q(L) for the completed matrix
};
QIdentityReport verify_q_identity(const AdjointModel& m);

struct PosdefReport {
  int samples = 0;
  unsigned long long seed = 0;
  bool all_pass = false;
  long long first_failure = -1;             // sample index of a counterexample
  std::vector<std::string> failure_x;       // witness assignment when failed
  bool symbolic_tier_applicable = false;    // pair set size <= 2
  bool symbolic_tier_certified = false;     // every cleared minor numerator positive
  std::vector<bool> minor_certificates;
};
PosdefReport check_posdef(const AdjointModel& m, int samples, unsigned long long seed);

struct BnCnReport {
  int n = 0;
  bool long_roots = true;  // B_n long (adjoint) vs C_n short (coadjoint)
  bool matches = false;
  std::string determinant;  // det of the congruent matrix, canonicalized
};
BnCnReport bn_cn_determinant(int n, bool long_roots);

struct SigmaChecksReport {
  std::string space;
  int sigma_rep = -1;       // class rep of the root R - alpha_1 - alpha_2
  int codim_sigma = 0;
  bool nonzero_in_range = false;   // sigma * sigma(w) != 0 whenever 2 deg <= dim
  int min_annihilator_codim = -1;
  std::vector<int> min_annihilators;  // class reps at that codimension
  bool annihilator_is_neg_alpha1 = false;
  bool degree_bound_holds = false;    // 2 deg sigma' > dim
  bool all_pass = false;
};
SigmaChecksReport coadjoint_sigma_checks(const AdjointModel& m);

struct MMatrixReport {
  std::vector<Int> x_row;                 // i^*(h) c(u) over the u-columns
  std::vector<std::string> y_row;         // [D] c(u): symbols or numbers
  std::vector<std::string> right_row1;    // i^*(h) gamma(v) = sum c y
  std::vector<std::string> right_row2;    // [D] gamma(v): opaque symbols
  std::vector<std::string> left_minors;   // 2x2 minors over the u-columns
  bool numeric = false;
  bool left_rank_one = false;             // all left minors vanish (numeric mode)
};
MMatrixReport m_matrix(const AdjointModel& m, const CohClass& Y,
                       const std::optional<std::vector<Rat>>& y_values);

}  // namespace hsx
