#include "hsx/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace hsx {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidType: return "InvalidType";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::EmptyParabolic: return "EmptyParabolic";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::TopDegree: return "TopDegree";
    case Errc::NotPicardRankOne: return "NotPicardRankOne";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ParityError: return "ParityError";
    case Errc::NegativeCoefficient: return "NegativeCoefficient";
    case Errc::CostGuardExceeded: return "CostGuardExceeded";
    case Errc::NotASubvariety: return "NotASubvariety";
    case Errc::PicardRankNotOne: return "PicardRankNotOne";
    case Errc::CrossCheckFailed: return "CrossCheckFailed";
    case Errc::NonpositiveX: return "NonpositiveX";
    case Errc::IdentityFailed: return "IdentityFailed";
    case Errc::PosdefFailed: return "PosdefFailed";
    case Errc::FormulaMismatch: return "FormulaMismatch";
    case Errc::PointCollision: return "PointCollision";
    case Errc::IrregularPoint: return "IrregularPoint";
    case Errc::CumbersomeViolation: return "CumbersomeViolation";
    case Errc::BadInput: return "BadInput";
  }
  return "Error";
}

namespace {

// Cartan matrices per Bourbaki numbering.  Only the off-diagonal entries are
// filled here; the diagonal is always 2.
std::vector<std::vector<int>> cartan_for(char series, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j, int aij = -1, int aji = -1) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) edge(i, i + 1);
  };
  switch (series) {
    case 'A':
      chain(1, n);
      break;
    case 'B':  // alpha_n short
      chain(1, n - 1);
      edge(n - 1, n, -1, -2);
      break;
    case 'C':  // alpha_n long
      chain(1, n - 1);
      edge(n - 1, n, -2, -1);
      break;
    case 'D':
      chain(1, n - 1);
      edge(n - 2, n);
      break;
    case 'E':
      // 1-3-4-5-6(-7)(-8) with 2 hanging off node 4
      edge(1, 3);
      edge(3, 4);
      edge(2, 4);
      for (int i = 4; i < n; ++i) edge(i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(1, 2);
      edge(2, 3, -1, -2);
      edge(3, 4);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      edge(1, 2, -3, -1);
      break;
    default:
      fail(Errc::InvalidType, std::string("unknown series ") + series);
  }
  return a;
}

void validate_type(char series, int rank) {
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    fail(Errc::InvalidType, std::string(1, series) + std::to_string(rank) + " is not a finite type");
}

long long height(const IVec& r) { return std::accumulate(r.begin(), r.end(), 0ll); }

}  // namespace

long long RootSystem::pair_coroot(const IVec& lambda_w, int root_idx) const {
  // <lambda, beta^vee> = sum_j lambda_j r_j sym_j / ((beta,beta)/2)
  const IVec& r = pos_roots[root_idx];
  long long num = 0;
  for (int j = 0; j < rank; ++j) num += lambda_w[j] * r[j] * sym[j];
  long long den = root_norm2h[root_idx];
  if (num % den != 0) fail(Errc::BasisMismatch, "non-integral coroot pairing");
  return num / den;
}

IVec RootSystem::to_weight_coords(const IVec& root) const {
  IVec w(rank, 0);
  for (int i = 0; i < rank; ++i) {
    long long s = 0;
    for (int j = 0; j < rank; ++j) s += cartan[i][j] * root[j];
    w[i] = s;
  }
  return w;
}

void RootSystem::reflect_weight(int i, IVec& v) const {
  long long c = v[i - 1];
  if (c == 0) return;
  for (int k = 0; k < rank; ++k) v[k] -= c * cartan[k][i - 1];
}

void RootSystem::reflect_weight(int i, std::vector<Rat>& v) const {
  Rat c = v[i - 1];
  if (c == 0) return;
  for (int k = 0; k < rank; ++k) v[k] -= c * cartan[k][i - 1];
}

void RootSystem::reflect_root(int i, IVec& r) const {
  long long s = 0;
  for (int j = 0; j < rank; ++j) s += cartan[i - 1][j] * r[j];
  r[i - 1] -= s;
}

void RootSystem::reflect_root(int i, std::vector<Rat>& r) const {
  Rat s = 0;
  for (int j = 0; j < rank; ++j) s += Rat(cartan[i - 1][j]) * r[j];
  r[i - 1] -= s;
}

int RootSystem::find_positive_root(const IVec& r) const {
  for (int k = 0; k < num_positive(); ++k)
    if (pos_roots[k] == r) return k;
  return -1;
}

RootSystem build_root_system(char series, int rank) {
  validate_type(series, rank);
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  rs.cartan = cartan_for(series, rank);

  // Symmetrizers: propagate ratios sym_j/sym_i = a_ij/a_ji over the Dynkin
  // graph, then scale so the minimum is 1 (short roots squared length 2).
  rs.sym.assign(rank, 0);
  rs.sym[0] = 2 * 3;  // divisible seed, rescaled below
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (i == j || rs.cartan[i][j] == 0) continue;
        if (rs.sym[i] != 0 && rs.sym[j] == 0) {
          rs.sym[j] = rs.sym[i] * rs.cartan[i][j] / rs.cartan[j][i];
          changed = true;
        }
      }
    if (!changed) {
      for (int i = 0; i < rank; ++i)
        if (rs.sym[i] == 0) {  // disconnected diagram cannot occur here, but stay safe
          rs.sym[i] = rs.sym[0];
          changed = true;
          break;
        }
    }
  }
  int mn = *std::min_element(rs.sym.begin(), rs.sym.end());
  for (int& s : rs.sym) s /= mn;

  // Positive roots: close the simple roots under simple reflections, keeping
  // the vectors with nonnegative coordinates.
  std::set<IVec> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < rank; ++i) {
    IVec e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IVec r = queue.back();
    queue.pop_back();
    for (int i = 1; i <= rank; ++i) {
      IVec s = r;
      rs.reflect_root(i, s);
      if (std::all_of(s.begin(), s.end(), [](long long x) { return x >= 0; }) && !seen.count(s)) {
        seen.insert(s);
        queue.push_back(s);
      }
    }
  }
  rs.pos_roots.assign(seen.begin(), seen.end());
  std::sort(rs.pos_roots.begin(), rs.pos_roots.end(), [](const IVec& a, const IVec& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  long long max_sym = *std::max_element(rs.sym.begin(), rs.sym.end());
  for (const IVec& r : rs.pos_roots) {
    rs.pos_roots_w.push_back(rs.to_weight_coords(r));
    // (beta,beta)/2 = (1/2) r^T D A r with D = diag(sym)
    long long n2 = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) n2 += r[i] * rs.sym[i] * rs.cartan[i][j] * r[j];
    rs.root_norm2h.push_back(n2 / 2);
    rs.root_is_long.push_back(n2 / 2 == max_sym);
  }

  // Highest (short) root: maximal height within each length class.
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (rs.root_is_long[k]) rs.theta = k;          // sorted by height, so last wins
    if (rs.root_norm2h[k] == 1) rs.theta_short = k;
  }
  if (max_sym == 1) rs.theta_short = rs.theta;  // simply laced: all roots tagged long

  // Fundamental weights in simple-root coordinates: columns of cartan^{-1}.
  // Plain Gauss-Jordan over exact rationals; rank <= 8 throughout.
  {
    int n = rank;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = rs.cartan[i][j];
      m[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (m[p][c] == 0) ++p;
      std::swap(m[p], m[c]);
      Rat inv = Rat(1) / m[c][c];
      for (int j = 0; j < 2 * n; ++j) m[c][j] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rat f = m[r][c];
        for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
      }
    }
    // omega_i solves <alpha_j^vee, omega_i> = delta_ij, i.e. cartan * x = e_i
    rs.fundamental_weights.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rs.fundamental_weights[i][j] = m[j][n + i];
  }

  return rs;
}

WeylElement identity_element(const RootSystem& rs) {
  WeylElement w;
  w.canon.assign(rs.rank, 1);
  return w;
}

int first_left_descent(const WeylElement& w) {
  for (std::size_t i = 0; i < w.canon.size(); ++i)
    if (w.canon[i] < 0) return static_cast<int>(i) + 1;
  return 0;
}

WeylElement left_mul(const RootSystem& rs, int i, const WeylElement& w) {
  require(i >= 1 && i <= rs.rank, Errc::IndexOutOfRange, "simple index " + std::to_string(i));
  WeylElement r = w;
  bool descent = w.canon[i - 1] < 0;
  rs.reflect_weight(i, r.canon);
  r.len += descent ? -1 : 1;
  if (descent && !r.word.empty() && r.word.front() == i) {
    r.word.erase(r.word.begin());
  } else {
    r.word = reduced_word_of(rs, r.canon);
  }
  return r;
}

WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = identity_element(rs);
  // Product s_{i1} s_{i2} ... s_{ik} applied to rho: rightmost letter first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    require(i >= 1 && i <= rs.rank, Errc::IndexOutOfRange, "letter " + std::to_string(i));
    bool descent = w.canon[i - 1] < 0;
    rs.reflect_weight(i, w.canon);
    w.len += descent ? -1 : 1;
  }
  w.word = reduced_word_of(rs, w.canon);
  return w;
}

std::vector<int> reduced_word_of(const RootSystem& rs, IVec canon) {
  std::vector<int> word;
  for (;;) {
    int i = 0;
    for (int k = 0; k < rs.rank; ++k)
      if (canon[k] < 0) {
        i = k + 1;
        break;
      }
    if (i == 0) break;
    word.push_back(i);
    rs.reflect_weight(i, canon);
  }
  return word;
}

int length_of(const RootSystem&, const WeylElement& w) { return w.len; }

Weight act_on_weight(const RootSystem& rs, const WeylElement& w, const Weight& v) {
  require(static_cast<int>(v.v.size()) == rs.rank, Errc::BasisMismatch,
          "vector length does not match rank");
  Weight r = v;
  // w = s_{i1}...s_{ik}: apply the rightmost reflection first.
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    if (v.basis == Basis::FundamentalWeight)
      rs.reflect_weight(*it, r.v);
    else
      rs.reflect_root(*it, r.v);
  }
  return r;
}

IVec act_on_root(const RootSystem& rs, const WeylElement& w, const IVec& root) {
  IVec r = root;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    long long s = 0;
    for (int j = 0; j < rs.rank; ++j) s += rs.cartan[*it - 1][j] * r[j];
    r[*it - 1] -= s;
  }
  return r;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  IVec ca = a.canon, cb = b.canon;
  int la = a.len, lb = b.len;
  while (lb > 0) {
    if (la > lb) return false;
    if (ca == cb) return true;
    int i = 0;
    for (int k = 0; k < rs.rank; ++k)
      if (cb[k] < 0) {
        i = k + 1;
        break;
      }
    rs.reflect_weight(i, cb);
    --lb;
    if (ca[i - 1] < 0) {
      rs.reflect_weight(i, ca);
      --la;
    }
  }
  return la == 0;
}

WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = identity_element(rs);
  for (;;) {
    int i = 0;
    for (int k = 0; k < rs.rank; ++k)
      if (w.canon[k] > 0) {
        i = k + 1;
        break;
      }
    if (i == 0) break;
    rs.reflect_weight(i, w.canon);
    ++w.len;
  }
  w.word = reduced_word_of(rs, w.canon);
  return w;
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(word[k]);
  }
  return s;
}

Int weyl_order(const RootSystem& rs) {
  std::unordered_set<IVec, IVecHash> orbit;
  std::vector<IVec> queue;
  IVec rho(rs.rank, 1);
  orbit.insert(rho);
  queue.push_back(rho);
  while (!queue.empty()) {
    IVec v = queue.back();
    queue.pop_back();
    for (int i = 1; i <= rs.rank; ++i) {
      IVec u = v;
      rs.reflect_weight(i, u);
      if (orbit.insert(u).second) queue.push_back(u);
    }
  }
  return Int(orbit.size());
}

}  // namespace hsx
