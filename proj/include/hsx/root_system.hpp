#pragma once

// Exact root-system and Weyl-group kernel for the finite types A-G.
//
// Conventions, used consistently by every module above this one:
//  * Simple roots are numbered 1..rank following Bourbaki's plates.
//  * cartan[i][j] = <alpha_i^vee, alpha_j> (0-based storage, 1-based API).
//  * Roots are stored as integer vectors in simple-root coordinates.
//  * The invariant form is normalized so short roots have squared length 2;
//    sym[i] = (alpha_i, alpha_i)/2 is the usual symmetrizer.
//  * Weights are vectors in fundamental-weight coordinates unless tagged
//    otherwise.  rho = (1,...,1) in those coordinates.
//  * A Weyl group element is identified by its canonical vector w(rho),
//    which is unique because rho is regular; a reduced word is carried along
//    for operations that need to act on arbitrary vectors.

#include <array>
#include <string>
#include <vector>

#include "hsx/error.hpp"
#include "hsx/numeric.hpp"

namespace hsx {

enum class Basis { SimpleRoot, FundamentalWeight };

struct Weight {
  Basis basis = Basis::FundamentalWeight;
  std::vector<Rat> v;
};

struct RootSystem {
  char series = 'A';
  int rank = 0;

  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
  std::vector<int> sym;                  // sym[i] = (alpha_i,alpha_i)/2, short roots = 1

  // Positive roots, sorted by (height, lex) on simple-root coordinates.
  std::vector<IVec> pos_roots;         // simple-root coordinates
  std::vector<IVec> pos_roots_w;       // the same roots in weight coordinates
  std::vector<long long> root_norm2h;  // (beta,beta)/2 per positive root
  std::vector<bool> root_is_long;      // all true in simply-laced types

  int theta = -1;        // index of the highest root into pos_roots
  int theta_short = -1;  // index of the highest short root (== theta if simply laced)

  std::vector<std::vector<Rat>> fundamental_weights;  // omega_i in simple-root coordinates

  int num_positive() const { return static_cast<int>(pos_roots.size()); }

  // <lambda, beta^vee> for lambda in weight coordinates and a positive root index.
  long long pair_coroot(const IVec& lambda_w, int root_idx) const;

  // Weight coordinates of an arbitrary root given in simple-root coordinates.
  IVec to_weight_coords(const IVec& root) const;

  // s_i acting on weight coordinates (i is 1-based).
  void reflect_weight(int i, IVec& v) const;
  void reflect_weight(int i, std::vector<Rat>& v) const;
  // s_i acting on simple-root coordinates (i is 1-based).
  void reflect_root(int i, IVec& r) const;
  void reflect_root(int i, std::vector<Rat>& r) const;

  // Index of a positive root given in simple-root coordinates, or -1.
  int find_positive_root(const IVec& r) const;
};

RootSystem build_root_system(char series, int rank);

struct WeylElement {
  IVec canon;             // w(rho) in weight coordinates
  int len = 0;            // inversion count
  std::vector<int> word;  // a reduced word, letters 1-based
};

WeylElement identity_element(const RootSystem& rs);
WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word);

// Left multiplication by the simple reflection s_i.
WeylElement left_mul(const RootSystem& rs, int i, const WeylElement& w);

int length_of(const RootSystem& rs, const WeylElement& w);

// Exact image of a tagged weight vector under w.
Weight act_on_weight(const RootSystem& rs, const WeylElement& w, const Weight& v);

// Image of a root (simple-root integer coordinates) under w.
IVec act_on_root(const RootSystem& rs, const WeylElement& w, const IVec& root);

// Bruhat order.  The test consumes a reduced word of b one left descent at a
// time, folding the letter into a exactly when it is also a descent of a;
// this is the greedy form of the subword criterion.
bool bruhat_leq(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

WeylElement longest_element(const RootSystem& rs);

// Smallest 1-based i with l(s_i w) < l(w), or 0 for the identity.
int first_left_descent(const WeylElement& w);

// Recover the canonical reduced word by greedy left descents.
std::vector<int> reduced_word_of(const RootSystem& rs, IVec canon);

std::string word_to_string(const std::vector<int>& word);

// Order of the full Weyl group by orbit enumeration of rho.
Int weyl_order(const RootSystem& rs);

}  // namespace hsx
