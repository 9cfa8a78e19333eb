#pragma once

// Homogeneous spaces G/P and their Schubert combinatorics.
//
// A Space enumerates the minimal coset representatives W^P by a breadth-first
// orbit walk of rho_P (the sum of the fundamental weights of the marked
// nodes); cosets correspond bijectively to orbit vectors, so |W| is never
// materialized.  Each representative carries its canonical vector w(rho), a
// reduced word, and the integer matrix of its action on weight coordinates,
// which makes reflection transitions O(rank^2).
//
// Grading convention: X^P(w) has dimension l(w); its cohomology class has
// codimension dim - l(w).  Strata are indexed by codimension throughout.
//
// Parabolic encoding: a standard parabolic Q >= B is stored by its marked
// node set Sigma(Q) (the simple roots whose negative unipotent is excluded);
// the Weyl group of its Levi is generated by the unmarked reflections.

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hsx/root_system.hpp"

namespace hsx {

struct SchubertIndex {
  int rep = -1;  // index into Space::reps
  int length = 0;
};

class Space {
 public:
  Space(RootSystem rs, std::set<int> parabolic_nodes);

  const RootSystem& rs() const { return rs_; }
  const std::set<int>& parabolic_nodes() const { return nodes_; }
  int dim() const { return dim_; }
  int num_reps() const { return static_cast<int>(len_.size()); }
  bool picard_rank_one() const { return nodes_.size() == 1; }
  int marked_node() const;  // requires Picard rank one
  std::string descriptor() const;

  int rep_length(int i) const { return len_[i]; }
  int codim(int i) const { return dim_ - len_[i]; }
  const std::vector<int>& rep_word(int i) const { return word_[i]; }
  const IVec& rep_canonical(int i) const { return canon_[i]; }
  WeylElement rep_element(int i) const;

  // Strata by codimension d; indices ascending (reps are sorted by
  // (length, canonical lex), so each stratum is itself deterministic).
  const std::vector<int>& stratum(int d) const;
  std::vector<SchubertIndex> degree_strata(int d) const;
  int position_in_stratum(int i) const { return strat_pos_[i]; }

  int dual(int i) const { return dual_[i]; }

  // Bruhat covering relations of the quotient order: covers_down(i) lists the
  // reps covered by i (length l(i)-1).
  const std::vector<int>& covers_down(int i) const { return covers_[i]; }

  // Chevalley transition list for multiplication by the hyperplane class:
  // h * sigma(w) = sum over (u, c) in chev(w) of c * sigma(u), where sigma(w)
  // is the class of X^P(w).  Only built for Picard rank one.
  const std::vector<std::pair<int, long long>>& chev(int w) const;

  // Minimal representative of the coset containing (element given by its
  // action matrix applied to rho_P); -1 if not found (cannot happen for
  // genuine group elements).
  int coset_of_orbit_vector(const IVec& v) const;

  // Locate a rep by the canonical vector of the element itself.
  std::optional<int> find_element(const IVec& canon) const;

  // Element-level image w*s_beta for a positive-root index; returns the
  // canonical vector of the product.
  IVec right_reflect_canonical(int i, int root_idx) const;
  // Orbit vector of the coset w*s_beta*W_P.
  IVec right_reflect_orbit(int i, int root_idx) const;

  // Bruhat order between minimal representatives (equals the quotient order).
  bool leq(int a, int b) const;

  // Stabilizer parabolic of X^P(w): returns the unmarked (Levi) node set and
  // the marked set Sigma^P(w).
  std::pair<std::set<int>, std::set<int>> stabilizer_roots(int w) const;

  // Unique maximal rep in W_Q * w * W_P for the standard parabolic Q with
  // marked set q_nodes (its Levi reflections are the unmarked nodes).
  int parabolic_span(const std::set<int>& q_nodes, int v) const;

  bool is_admissible(int v, int w) const;

  std::vector<SchubertIndex> minimal_generating() const;

  // Reps whose class has codimension 1 (the hyperplane class for Picard rank
  // one lives at the single index of stratum(1)).
  int hyperplane_rep() const;

  // Resolve a Weyl word to a rep index; the element must be a minimal
  // representative.
  int rep_from_word(const std::vector<int>& word) const;

 private:
  RootSystem rs_;
  std::set<int> nodes_;
  int dim_ = 0;

  std::vector<IVec> canon_;   // w(rho), weight coordinates
  std::vector<IVec> orbit_;   // w(rho_P), weight coordinates
  std::vector<int> len_;
  std::vector<std::vector<int>> word_;
  std::vector<std::vector<int>> mat_;  // rank x rank action on weight coordinates, row-major

  std::unordered_map<IVec, int, IVecHash> canon_index_;
  std::unordered_map<IVec, int, IVecHash> orbit_index_;

  std::vector<std::vector<int>> strata_;
  std::vector<int> strat_pos_;
  std::vector<int> dual_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<std::pair<int, long long>>> chev_;

  std::vector<int> outside_levi_;  // positive-root indices outside the Levi

  void apply_mat(int i, const IVec& in, IVec& out) const;
  void build_reps();
  void build_dual();
  void build_covers_and_chevalley();
};

// "B3/P2"-style descriptor.
Space space_from_descriptor(const std::string& desc);

}  // namespace hsx
