#include "hsx/adjoint.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "hsx/localize.hpp"

namespace hsx {

const char* adjoint_kind_name(AdjointKind k) {
  return k == AdjointKind::Adjoint ? "adjoint" : "coadjoint";
}

namespace {

long long relevant_norm(const RootSystem& rs, AdjointKind kind) {
  long long mx = *std::max_element(rs.sym.begin(), rs.sym.end());
  return kind == AdjointKind::Adjoint ? mx : 1;
}

}  // namespace

AdjointModel::AdjointModel(RootSystem rs, AdjointKind kind) : kind_(kind) {
  int theta_idx = kind == AdjointKind::Adjoint ? rs.theta : rs.theta_short;
  defining_root_ = rs.pos_roots[theta_idx];
  IVec wc = rs.pos_roots_w[theta_idx];

  int node = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (wc[i] == 0) continue;
    require(node == 0, Errc::PicardRankNotOne,
            std::string(1, rs.series) + std::to_string(rs.rank) + " " + adjoint_kind_name(kind) +
                ": defining root is supported on more than one node");
    node = i + 1;
  }

  long long want = relevant_norm(rs, kind);
  for (int i = 0; i < rs.rank; ++i)
    if (rs.sym[i] == want) rel_nodes_.push_back(i + 1);

  space_.emplace(std::move(rs), std::set<int>{node});
  const Space& X = *space_;
  const RootSystem& r = X.rs();

  // variety roots w(R); must biject onto the roots of the relevant length
  root_of_rep_.resize(X.num_reps());
  for (int i = 0; i < X.num_reps(); ++i) {
    IVec img = act_on_root(r, X.rep_element(i), defining_root_);
    IVec abs = img;
    bool negative = false;
    for (long long c : img)
      if (c < 0) negative = true;
    if (negative)
      for (auto& c : abs) c = -c;
    int k = r.find_positive_root(abs);
    require(k >= 0 && r.root_norm2h[k] == want, Errc::CrossCheckFailed,
            "orbit of the defining root left the relevant length class");
    require(rep_of_root_.emplace(img, i).second, Errc::CrossCheckFailed,
            "class/root correspondence is not injective");
    root_of_rep_[i] = std::move(img);
  }

  // Sigma^P(w) = { beta : <beta^vee, w(R)> > 0 } for every representative
  for (int i = 0; i < X.num_reps(); ++i) {
    IVec wroot = r.to_weight_coords(root_of_rep_[i]);
    std::set<int> expect;
    for (int b = 1; b <= r.rank; ++b)
      if (wroot[b - 1] > 0) expect.insert(b);
    require(X.stabilizer_roots(i).second == expect, Errc::CrossCheckFailed,
            "stabilizer parabolic disagrees with the root criterion at rep " +
                word_to_string(X.rep_word(i)));
  }

  for (std::size_t s = 0; s < rel_nodes_.size(); ++s)
    for (std::size_t t = s + 1; t < rel_nodes_.size(); ++t)
      if (r.cartan[rel_nodes_[s] - 1][rel_nodes_[t] - 1] < 0)
        pairs_.emplace_back(static_cast<int>(s), static_cast<int>(t));
}

AdjointModel build_adjoint_model(RootSystem rs, AdjointKind kind) {
  return AdjointModel(std::move(rs), kind);
}

int AdjointModel::rep_of_root(const IVec& root) const {
  auto f = rep_of_root_.find(root);
  require(f != rep_of_root_.end(), Errc::BadInput, "no class carries that root");
  return f->second;
}

int AdjointModel::class_rep_of_simple(int t, bool negative) const {
  IVec root(space().rs().rank, 0);
  root[rel_nodes_[t] - 1] = negative ? -1 : 1;
  return class_rep_of_root(root);
}

void AdjointModel::verify_chevalley_table() const {
  if (!chev_checked_.empty()) return;
  int n = n_rel();
  const Space& X = space();
  chev_checked_.assign(n, std::vector<int>(n, 0));
  for (int t = 0; t < n; ++t) {
    CohClass from = schubert_class(X, class_rep_of_simple(t, false));
    CohClass up = chevalley_h_mult(X, from);
    for (int t2 = 0; t2 < n; ++t2) {
      int target = class_rep_of_simple(t2, true);
      auto it = up.coeffs.find(target);
      Int got = it == up.coeffs.end() ? Int(0) : it->second;
      int a = space().rs().cartan[rel_nodes_[t] - 1][rel_nodes_[t2] - 1];
      int table = t == t2 ? 2 : (a < 0 ? 1 : 0);
      require(got == table, Errc::CrossCheckFailed,
              descriptor() + ": Chevalley value between the middle classes at (" +
                  std::to_string(rel_nodes_[t]) + "," + std::to_string(rel_nodes_[t2]) +
                  ") is " + got.str() + ", table says " + std::to_string(table));
      chev_checked_[t][t2] = table;
    }
  }
}

int AdjointModel::chevalley_coeff(int t, int t2) const {
  require(t >= 0 && t < n_rel() && t2 >= 0 && t2 < n_rel(), Errc::IndexOutOfRange,
          "relevant-simple index");
  verify_chevalley_table();
  return chev_checked_[t][t2];
}

Poly AdjointModel::d_form(int t) const {
  int n = n_rel();
  Poly d(2 * n);
  for (int t2 = 0; t2 < n; ++t2) {
    int c = chevalley_coeff(t, t2);
    if (c) d = d + Poly::monomial(2 * n, t2, 2, Rat(c));
  }
  return d;
}

std::string AdjointModel::descriptor() const {
  return space().descriptor() + " " + adjoint_kind_name(kind_);
}

CohClass default_middle_class(const AdjointModel& m) {
  const Space& X = m.space();
  require((X.dim() - 3) % 2 == 0, Errc::DegreeMismatch, "dim must be odd");
  return h_power(X, (X.dim() - 3) / 2);
}

MiddleData middle_data(const AdjointModel& m, const CohClass& Y, int d, bool strict) {
  const Space& X = m.space();
  require(d == 1, Errc::DegreeMismatch, "only the normalized case d = 1 is implemented");
  require(X.dim() % 2 == 1 && Y.codim == (X.dim() - 3) / 2, Errc::DegreeMismatch,
          "the class [Y] must have codimension (dim-3)/2");
  validate_class(X, Y);

  int n = m.n_rel();
  MiddleData out;
  CohClass hy = chevalley_h_mult(X, Y);
  CohClass h2y = chevalley_h_mult(X, hy);

  // [Y] h lives on the stratum of the simple-root classes; its support must
  // be exactly those classes.
  {
    std::set<int> stratum_set(X.stratum(hy.codim).begin(), X.stratum(hy.codim).end());
    std::set<int> expect;
    for (int t = 0; t < n; ++t) expect.insert(m.class_rep_of_simple(t, false));
    require(stratum_set == expect, Errc::CrossCheckFailed,
            "the codim (dim-1)/2 stratum is not the set of simple-root classes");
  }

  for (int t = 0; t < n; ++t) {
    out.x.push_back(pair_complementary(X, hy, schubert_class(X, m.class_rep_of_simple(t, true))));
    auto it = hy.coeffs.find(m.class_rep_of_simple(t, false));
    out.a.push_back(it == hy.coeffs.end() ? Int(0) : it->second);
    out.d.push_back(
        pair_complementary(X, h2y, schubert_class(X, m.class_rep_of_simple(t, false))));
  }

  for (int t = 0; t < n; ++t) {
    require(out.x[t] == out.a[t], Errc::CrossCheckFailed, "x_u = a_{-u} failed");
    Int dd = 0;
    for (int t2 = 0; t2 < n; ++t2) dd += Int(m.chevalley_coeff(t, t2)) * out.x[t2];
    require(dd == out.d[t], Errc::CrossCheckFailed, "d_u = sum c x failed");
    if (strict)
      require(out.a[t] > 0, Errc::CumbersomeViolation,
              "a coefficient of [Y]h is not positive; [Y]h^d is not cumbersome");
  }
  return out;
}

namespace {

// L(s,t) for s < t (indices into the relevant simples), doubled exponents:
// (x_s y_t - x_t y_s) / sqrt(x_s x_t)
Poly l_coordinate(int n, int s, int t) {
  Poly p(2 * n);
  Mono m1(2 * n, 0);
  m1[s] = 1;   // x_s^{1/2}
  m1[t] = -1;  // x_t^{-1/2}
  m1[n + t] = 2;
  p.add_term(m1, 1);
  Mono m2(2 * n, 0);
  m2[t] = 1;
  m2[s] = -1;
  m2[n + s] = 2;
  p.add_term(m2, -1);
  return p;
}

struct PathCross {
  int p1, p2;   // indices into the pair set
  int e1, e2;   // endpoint variable indices (e1 < e2)
  int mid;      // shared middle variable index
  int sign;     // orientation sign sgn1 * sgn2
  bool chain;   // e1 < mid < e2: the pattern the displayed rule covers
};

std::vector<PathCross> path_crosses(const AdjointModel& m) {
  const auto& pairs = m.pair_set();
  auto pair_index = [&](int a, int b) {
    std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i] == key) return static_cast<int>(i);
    return -1;
  };
  std::vector<PathCross> out;
  int n = m.n_rel();
  for (int mid = 0; mid < n; ++mid) {
    std::vector<int> nb;
    for (int e = 0; e < n; ++e)
      if (e != mid && pair_index(mid, e) >= 0) nb.push_back(e);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        PathCross pc;
        pc.e1 = nb[i];
        pc.e2 = nb[j];
        pc.mid = mid;
        pc.p1 = pair_index(pc.e1, mid);
        pc.p2 = pair_index(mid, pc.e2);
        int s1 = pc.e1 < mid ? 1 : -1;  // L(e1,mid) vs L(min,max)
        int s2 = mid < pc.e2 ? 1 : -1;  // L(mid,e2) vs L(min,max)
        pc.sign = s1 * s2;
        pc.chain = pc.e1 < mid && mid < pc.e2;
        out.push_back(pc);
      }
  }
  return out;
}

}  // namespace

SymbolicForm q_form(const AdjointModel& m) {
  int n = m.n_rel();
  std::vector<Poly> dforms;
  for (int t = 0; t < n; ++t) dforms.push_back(m.d_form(t));
  Poly D = Poly::constant(2 * n, 1);
  for (const Poly& d : dforms) D = D * d;
  std::vector<Poly> dover(n, Poly::constant(2 * n, 1));
  for (int t = 0; t < n; ++t)
    for (int t2 = 0; t2 < n; ++t2)
      if (t2 != t) dover[t] = dover[t] * dforms[t2];

  Poly qd(2 * n);
  for (int t = 0; t < n; ++t)
    for (int t2 = 0; t2 < n; ++t2) {
      Poly coeff = D * Rat(m.chevalley_coeff(t, t2));
      for (int t3 = 0; t3 < n; ++t3) {
        int cc = m.chevalley_coeff(t3, t) * m.chevalley_coeff(t3, t2);
        if (cc)
          coeff = coeff - Poly::monomial(2 * n, t3, 2, Rat(cc)) * dover[t3];
      }
      Poly yy = Poly::monomial(2 * n, n + t, 2) * Poly::monomial(2 * n, n + t2, 2);
      qd = qd + yy * coeff;
    }
  return {qd, D};
}

Poly q_form(const AdjointModel& m, const std::vector<Rat>& x) {
  int n = m.n_rel();
  require(static_cast<int>(x.size()) == n, Errc::BadInput, "x arity");
  std::vector<Rat> d(n, Rat(0));
  for (int t = 0; t < n; ++t) {
    require(x[t] > 0, Errc::NonpositiveX, "x must be positive");
    for (int t2 = 0; t2 < n; ++t2) d[t] += Rat(m.chevalley_coeff(t, t2)) * x[t2];
  }
  Poly q(2 * n);
  for (int t = 0; t < n; ++t)
    for (int t2 = 0; t2 < n; ++t2) {
      Rat a = m.chevalley_coeff(t, t2);
      for (int t3 = 0; t3 < n; ++t3)
        a -= x[t3] / d[t3] * m.chevalley_coeff(t3, t) * m.chevalley_coeff(t3, t2);
      if (a == 0) continue;
      Mono mono(2 * n, 0);
      mono[n + t] += 2;
      mono[n + t2] += 2;
      q.add_term(mono, a);
    }
  return q;
}

QMatrix q_matrix(const AdjointModel& m, bool literal) {
  int n = m.n_rel();
  const auto& pairs = m.pair_set();
  int np = static_cast<int>(pairs.size());
  QMatrix out;
  out.pairs = pairs;
  out.entries.assign(np, std::vector<QEntry>(np, QEntry{RationalFn(2 * n), -1, -1}));
  for (int p = 0; p < np; ++p)
    for (int p2 = 0; p2 < np; ++p2) out.entries[p][p2].coeff.num = Poly(2 * n);

  std::vector<Poly> dforms;
  for (int t = 0; t < n; ++t) dforms.push_back(m.d_form(t));

  for (int p = 0; p < np; ++p) {
    auto [s, t] = pairs[p];
    // 1 - x_s/d_t - x_t/d_s over the common denominator d_s d_t
    Poly num = dforms[s] * dforms[t] - Poly::monomial(2 * n, s, 2) * dforms[s] -
               Poly::monomial(2 * n, t, 2) * dforms[t];
    out.entries[p][p].coeff = RationalFn(num, dforms[s] * dforms[t]);
  }
  for (const PathCross& pc : path_crosses(m)) {
    if (literal && !pc.chain) continue;
    RationalFn c(2 * n);
    c.num = Poly::constant(2 * n, Rat(pc.sign));
    c.den = dforms[pc.mid];
    out.entries[pc.p1][pc.p2] = QEntry{c, pc.e1, pc.e2};
    out.entries[pc.p2][pc.p1] = QEntry{c, pc.e1, pc.e2};
  }
  return out;
}

std::vector<std::vector<Rat>> q_matrix_congruent(const AdjointModel& m, const std::vector<Rat>& x,
                                                 bool literal) {
  int n = m.n_rel();
  require(static_cast<int>(x.size()) == n, Errc::BadInput, "x arity");
  std::vector<Rat> d(n, Rat(0));
  for (int t = 0; t < n; ++t) {
    require(x[t] > 0, Errc::NonpositiveX, "x must be positive");
    for (int t2 = 0; t2 < n; ++t2) d[t] += Rat(m.chevalley_coeff(t, t2)) * x[t2];
  }
  const auto& pairs = m.pair_set();
  int np = static_cast<int>(pairs.size());
  std::vector<std::vector<Rat>> out(np, std::vector<Rat>(np, Rat(0)));
  for (int p = 0; p < np; ++p) {
    auto [s, t] = pairs[p];
    out[p][p] = x[s] * x[t] * (Rat(1) - x[s] / d[t] - x[t] / d[s]);
  }
  for (const PathCross& pc : path_crosses(m)) {
    if (literal && !pc.chain) continue;
    Rat v = Rat(pc.sign) * x[pc.mid] * x[pc.e1] * x[pc.e2] / d[pc.mid];
    out[pc.p1][pc.p2] = v;
    out[pc.p2][pc.p1] = v;
  }
  return out;
}

namespace {

// Q(L) * D as a polynomial with doubled exponents.
Poly q_of_l_times_d(const AdjointModel& m, bool literal) {
  int n = m.n_rel();
  const auto& pairs = m.pair_set();
  std::vector<Poly> dforms;
  for (int t = 0; t < n; ++t) dforms.push_back(m.d_form(t));
  Poly D = Poly::constant(2 * n, 1);
  for (const Poly& d : dforms) D = D * d;
  std::vector<Poly> dover(n, Poly::constant(2 * n, 1));
  for (int t = 0; t < n; ++t)
    for (int t2 = 0; t2 < n; ++t2)
      if (t2 != t) dover[t] = dover[t] * dforms[t2];

  std::vector<Poly> L;
  for (auto [s, t] : pairs) L.push_back(l_coordinate(n, s, t));

  Poly acc(2 * n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [s, t] = pairs[p];
    Poly num = dforms[s] * dforms[t] - Poly::monomial(2 * n, s, 2) * dforms[s] -
               Poly::monomial(2 * n, t, 2) * dforms[t];
    // (num / (d_s d_t)) * L_p^2 * D = num * L_p^2 * prod_{u != s,t} d_u
    Poly rest = Poly::constant(2 * n, 1);
    for (int t2 = 0; t2 < n; ++t2)
      if (t2 != s && t2 != t) rest = rest * dforms[t2];
    acc = acc + num * rest * L[p] * L[p];
  }
  for (const PathCross& pc : path_crosses(m)) {
    if (literal && !pc.chain) continue;
    Mono rad(2 * n, 0);
    rad[pc.e1] = 1;
    rad[pc.e2] = 1;
    Poly sq(2 * n);
    sq.add_term(rad, Rat(2 * pc.sign));
    acc = acc + sq * dover[pc.mid] * L[pc.p1] * L[pc.p2];
  }
  return acc;
}

Poly qprime_times_d(const AdjointModel& m) {
  int n = m.n_rel();
  std::vector<Poly> dforms;
  for (int t = 0; t < n; ++t) dforms.push_back(m.d_form(t));
  std::vector<Poly> dover(n, Poly::constant(2 * n, 1));
  for (int t = 0; t < n; ++t)
    for (int t2 = 0; t2 < n; ++t2)
      if (t2 != t) dover[t] = dover[t] * dforms[t2];
  Poly D = Poly::constant(2 * n, 1);
  for (const Poly& d : dforms) D = D * d;

  Poly acc(2 * n);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      Poly lsq = l_coordinate(n, s, t);
      lsq = lsq * lsq;
      Poly coeff(2 * n);
      for (int t3 = 0; t3 < n; ++t3) {
        int cc = m.chevalley_coeff(t3, s) * m.chevalley_coeff(t3, t);
        if (cc) coeff = coeff + Poly::monomial(2 * n, t3, 2, Rat(cc)) * dover[t3];
      }
      coeff = coeff - D * Rat(m.chevalley_coeff(s, t));
      acc = acc + coeff * lsq;
    }
  return acc;
}

}  // namespace

QIdentityReport verify_q_identity(const AdjointModel& m) {
  QIdentityReport rep;
  SymbolicForm q = q_form(m);
  Poly completed = q_of_l_times_d(m, false);
  Poly literal = q_of_l_times_d(m, true);
  require(completed.exponents_all_even(), Errc::IdentityFailed,
          "a radical survived the expansion of Q(L)");
  Poly diff = q.num - completed;
  rep.completed_ok = diff.is_zero();
  rep.literal_ok = (q.num - literal).is_zero();
  rep.q_equals_qprime = (q.num - qprime_times_d(m)).is_zero();

  std::vector<std::string> names;
  for (int t = 0; t < m.n_rel(); ++t) names.push_back("x" + std::to_string(t + 1));
  for (int t = 0; t < m.n_rel(); ++t) names.push_back("y" + std::to_string(t + 1));
  rep.difference = diff.to_string(names, 2);
  return rep;
}

PosdefReport check_posdef(const AdjointModel& m, int samples, unsigned long long seed) {
  require(samples >= 1, Errc::BadInput, "samples >= 1");
  PosdefReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.all_pass = true;
  int n = m.n_rel();

  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long long> dist(1, 1000);
  for (int s = 0; s < samples && rep.all_pass; ++s) {
    std::vector<Rat> x;
    for (int t = 0; t < n; ++t) x.emplace_back(Rat(dist(gen), dist(gen)));
    auto q = q_matrix_congruent(m, x);
    int np = static_cast<int>(q.size());
    // scale to an integer matrix; leading minors keep their signs
    Int common = 1;
    for (auto& row : q)
      for (Rat& e : row) common = boost::multiprecision::lcm(common, Int(denominator(e)));
    IMat mi(np, std::vector<Int>(np));
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j) {
        Rat v = q[i][j] * Rat(common);
        mi[i][j] = numerator(v);
      }
    if (classify_symmetric(mi).verdict != Definiteness::PositiveDefinite) {
      rep.all_pass = false;
      rep.first_failure = s;
      for (const Rat& v : x) rep.failure_x.push_back(v.str());
    }
  }

  rep.symbolic_tier_applicable = m.pair_set().size() <= 2 && !m.pair_set().empty();
  if (rep.symbolic_tier_applicable) {
    QMatrix qm = q_matrix(m);
    int np = static_cast<int>(qm.pairs.size());
    // leading principal minors of the congruent symbolic matrix; a cleared
    // numerator with exclusively positive coefficients certifies positivity
    // on the positive orthant (sufficient only)
    std::vector<std::vector<RationalFn>> cm(np, std::vector<RationalFn>(np, RationalFn(2 * n)));
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j) {
        const QEntry& e = qm.entries[i][j];
        RationalFn v = e.coeff;
        // multiply by s_i s_j = sqrt(x_{pairs} ...): collect the doubled
        // exponent sum and fold the radical part in
        Mono scale(2 * n, 0);
        scale[qm.pairs[i].first] += 1;
        scale[qm.pairs[i].second] += 1;
        scale[qm.pairs[j].first] += 1;
        scale[qm.pairs[j].second] += 1;
        if (e.sqrt_a >= 0) {
          scale[e.sqrt_a] += 1;
          scale[e.sqrt_b] += 1;
        }
        Poly sp(2 * n);
        sp.add_term(scale, 1);
        v.num = v.num * sp;
        require(v.num.exponents_all_even(), Errc::IdentityFailed, "radical failed to clear");
        cm[i][j] = v;
      }
    rep.symbolic_tier_certified = true;
    for (int k = 1; k <= np; ++k) {
      RationalFn det(2 * n);
      if (k == 1) {
        det = cm[0][0];
      } else {  // 2x2
        det = cm[0][0] * cm[1][1] - cm[0][1] * cm[1][0];
      }
      bool pos = !det.num.is_zero();
      for (const auto& [mono, c] : det.num.terms())
        if (c <= 0) pos = false;
      for (const auto& [mono, c] : det.den.terms())
        require(c > 0, Errc::IdentityFailed, "denominator with nonpositive coefficients");
      rep.minor_certificates.push_back(pos);
      if (!pos) rep.symbolic_tier_certified = false;
    }
  }
  return rep;
}

BnCnReport bn_cn_determinant(int n, bool long_roots) {
  require(n >= 3, Errc::BadInput, "the determinant formula is asserted for n >= 3 only");
  BnCnReport rep;
  rep.n = n;
  rep.long_roots = long_roots;
  AdjointModel m(build_root_system(long_roots ? 'B' : 'C', n),
                 long_roots ? AdjointKind::Adjoint : AdjointKind::Coadjoint);
  int nr = m.n_rel();
  require(nr == n - 1, Errc::FormulaMismatch, "expected n-1 relevant simple roots");
  for (int t = 0; t < nr; ++t)
    require(m.relevant_simples()[t] == t + 1, Errc::FormulaMismatch,
            "relevant simples must be alpha_1..alpha_{n-1}");

  // determinant of the congruent matrix (rational entries) by cofactors
  QMatrix qm = q_matrix(m);
  int np = static_cast<int>(qm.pairs.size());
  std::vector<std::vector<RationalFn>> cm(np, std::vector<RationalFn>(np, RationalFn(2 * nr)));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      const QEntry& e = qm.entries[i][j];
      RationalFn v = e.coeff;
      Mono scale(2 * nr, 0);
      scale[qm.pairs[i].first] += 1;
      scale[qm.pairs[i].second] += 1;
      scale[qm.pairs[j].first] += 1;
      scale[qm.pairs[j].second] += 1;
      if (e.sqrt_a >= 0) {
        scale[e.sqrt_a] += 1;
        scale[e.sqrt_b] += 1;
      }
      Poly sp(2 * nr);
      sp.add_term(scale, 1);
      v.num = v.num * sp;
      cm[i][j] = v;
    }

  std::function<RationalFn(std::vector<int>, std::vector<int>)> det =
      [&](std::vector<int> rows, std::vector<int> cols) -> RationalFn {
    if (rows.size() == 1) return cm[rows[0]][cols[0]];
    RationalFn acc(2 * nr);
    acc.num = Poly(2 * nr);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<int> r2(rows.begin() + 1, rows.end());
      std::vector<int> c2 = cols;
      c2.erase(c2.begin() + j);
      RationalFn sub = det(r2, c2) * cm[rows[0]][cols[j]];
      if (j % 2)
        acc = acc - sub;
      else
        acc = acc + sub;
    }
    return acc;
  };
  std::vector<int> idx(np);
  for (int i = 0; i < np; ++i) idx[i] = i;
  RationalFn got = det(idx, idx);

  // closed form n x_1...x_{n-1} / (d_1...d_{n-1}), times the congruence factor
  // prod_p x_{u_p} x_{u_p'}
  RationalFn expect(2 * nr);
  Poly num = Poly::constant(2 * nr, Rat(n));
  for (int t = 0; t < nr; ++t) num = num * Poly::monomial(2 * nr, t, 2);
  for (auto [s, t] : qm.pairs) {
    num = num * Poly::monomial(2 * nr, s, 2) * Poly::monomial(2 * nr, t, 2);
  }
  Poly den = Poly::constant(2 * nr, 1);
  for (int t = 0; t < nr; ++t) den = den * m.d_form(t);
  expect = RationalFn(num, den);

  rep.matches = got.equals(expect);
  std::vector<std::string> names;
  for (int t = 0; t < nr; ++t) names.push_back("x" + std::to_string(t + 1));
  for (int t = 0; t < nr; ++t) names.push_back("y" + std::to_string(t + 1));
  rep.determinant = "(" + got.num.to_string(names, 2) + ") / (" + got.den.to_string(names, 2) + ")";
  return rep;
}

SigmaChecksReport coadjoint_sigma_checks(const AdjointModel& m) {
  const Space& X = m.space();
  const RootSystem& rs = X.rs();
  require((rs.series == 'B' || rs.series == 'C' || rs.series == 'D') && X.marked_node() == 2,
          Errc::BadInput, "the sigma checks concern the isotropic line grassmannians (node 2)");

  SigmaChecksReport rep;
  rep.space = m.descriptor();
  IVec sigma_root = m.defining_root();
  sigma_root[0] -= 1;
  sigma_root[1] -= 1;
  rep.sigma_rep = m.class_rep_of_root(sigma_root);
  rep.codim_sigma = X.codim(rep.sigma_rep);

  EvalPoint pt = make_eval_point(rs, 424242ull);
  auto product_is_zero = [&](int a, int b) {
    int rem = X.dim() - X.codim(a) - X.codim(b);
    if (rem < 0) return true;
    for (int t : X.stratum(rem))
      if (integrate(X, {a, b, t}, pt) != 0) return false;
    return true;
  };

  rep.nonzero_in_range = true;
  for (int w = 0; w < X.num_reps(); ++w) {
    if (2 * X.codim(w) > X.dim()) continue;
    if (product_is_zero(rep.sigma_rep, w)) rep.nonzero_in_range = false;
  }

  for (int c = 0; c <= X.dim() && rep.min_annihilator_codim < 0; ++c) {
    std::vector<int> ann;
    for (int t : X.stratum(c))
      if (product_is_zero(rep.sigma_rep, t)) ann.push_back(t);
    if (!ann.empty()) {
      rep.min_annihilator_codim = c;
      rep.min_annihilators = ann;
    }
  }

  IVec neg_alpha1(rs.rank, 0);
  neg_alpha1[0] = -1;
  int target = m.class_rep_of_root(neg_alpha1);
  rep.annihilator_is_neg_alpha1 =
      rep.min_annihilators.size() == 1 && rep.min_annihilators[0] == target;
  rep.degree_bound_holds = 2 * rep.min_annihilator_codim > X.dim();
  rep.all_pass = rep.nonzero_in_range && rep.annihilator_is_neg_alpha1 && rep.degree_bound_holds;
  return rep;
}

MMatrixReport m_matrix(const AdjointModel& m, const CohClass& Y,
                       const std::optional<std::vector<Rat>>& y_values) {
  int n = m.n_rel();
  MiddleData md = middle_data(m, Y);
  MMatrixReport rep;
  rep.numeric = y_values.has_value();
  if (rep.numeric)
    require(static_cast<int>(y_values->size()) == n, Errc::BadInput, "y arity");

  auto y_str = [&](int t) {
    return rep.numeric ? (*y_values)[t].str() : "y" + std::to_string(t + 1);
  };

  for (int t = 0; t < n; ++t) {
    rep.x_row.push_back(md.x[t]);
    rep.y_row.push_back(y_str(t));
  }
  for (int t = 0; t < n; ++t) {
    // i^*(h) gamma(v) = sum_u c_{v,h}^u y_u through the verified table
    std::string s;
    Rat num = 0;
    for (int u = 0; u < n; ++u) {
      int c = m.chevalley_coeff(t, u);
      if (!c) continue;
      if (rep.numeric) {
        num += Rat(c) * (*y_values)[u];
      } else {
        if (!s.empty()) s += " + ";
        s += (c == 1 ? "" : std::to_string(c) + "*") + y_str(u);
      }
    }
    rep.right_row1.push_back(rep.numeric ? num.str() : s);
    // [D] gamma(v) = [D]^2 i^*(sigma(v)): not determined by classes alone
    rep.right_row2.push_back("g" + std::to_string(t + 1));
  }

  rep.left_rank_one = true;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (rep.numeric) {
        Rat mn = Rat(md.x[s]) * (*y_values)[t] - Rat(md.x[t]) * (*y_values)[s];
        rep.left_minors.push_back(mn.str());
        if (mn != 0) rep.left_rank_one = false;
      } else {
        rep.left_minors.push_back(md.x[s].str() + "*y" + std::to_string(t + 1) + " - " +
                                  md.x[t].str() + "*y" + std::to_string(s + 1));
        rep.left_rank_one = false;
      }
    }
  if (!rep.numeric) rep.left_rank_one = false;
  return rep;
}

}  // namespace hsx
