#include "hsx/space.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hsx {

namespace {

// matrix of s_i on fundamental-weight coordinates (row-major rank x rank):
// column i is e_i - cartan[.][i], the others are identity columns
std::vector<int> simple_reflection_matrix(const RootSystem& rs, int i) {
  int n = rs.rank;
  std::vector<int> m(n * n, 0);
  for (int k = 0; k < n; ++k) m[k * n + k] = 1;
  for (int k = 0; k < n; ++k) m[k * n + (i - 1)] -= rs.cartan[k][i - 1];
  return m;
}

std::vector<int> mat_mul(int n, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

}  // namespace

Space::Space(RootSystem rs, std::set<int> parabolic_nodes)
    : rs_(std::move(rs)), nodes_(std::move(parabolic_nodes)) {
  require(!nodes_.empty(), Errc::EmptyParabolic, "parabolic node set is empty");
  for (int i : nodes_)
    require(i >= 1 && i <= rs_.rank, Errc::IndexOutOfRange, "node " + std::to_string(i));

  // Positive roots outside the Levi: nonzero coordinate on some marked node.
  for (int k = 0; k < rs_.num_positive(); ++k) {
    for (int i : nodes_)
      if (rs_.pos_roots[k][i - 1] != 0) {
        outside_levi_.push_back(k);
        break;
      }
  }
  dim_ = static_cast<int>(outside_levi_.size());

  build_reps();
  build_dual();
  build_covers_and_chevalley();
}

void Space::apply_mat(int i, const IVec& in, IVec& out) const {
  int n = rs_.rank;
  const int* m = mat_[i].data();
  for (int r = 0; r < n; ++r) {
    long long s = 0;
    for (int c = 0; c < n; ++c) s += m[r * n + c] * in[c];
    out[r] = s;
  }
}

void Space::build_reps() {
  int n = rs_.rank;
  IVec rho(n, 1), rho_p(n, 0);
  for (int i : nodes_) rho_p[i - 1] = 1;

  struct Node {
    IVec canon, orbit;
    int len;
    std::vector<int> word;
    std::vector<int> mat;
  };
  std::vector<Node> found;
  std::unordered_map<IVec, int, IVecHash> seen;

  std::vector<int> id(n * n, 0);
  for (int k = 0; k < n; ++k) id[k * n + k] = 1;
  found.push_back({rho, rho_p, 0, {}, id});
  seen.emplace(rho_p, 0);

  std::vector<std::vector<int>> srefl(n + 1);
  for (int i = 1; i <= n; ++i) srefl[i] = simple_reflection_matrix(rs_, i);

  // BFS by length: a new orbit vector is always reached first from a rep one
  // shorter, so lengths and reduced words come out of the queue for free.
  for (std::size_t head = 0; head < found.size(); ++head) {
    Node cur = found[head];  // copy: found may reallocate
    for (int i = 1; i <= n; ++i) {
      IVec o = cur.orbit;
      rs_.reflect_weight(i, o);
      if (o == cur.orbit || seen.count(o)) continue;
      Node nx;
      nx.orbit = std::move(o);
      nx.canon = cur.canon;
      rs_.reflect_weight(i, nx.canon);
      nx.len = cur.len + 1;
      nx.word = cur.word;
      nx.word.insert(nx.word.begin(), i);
      nx.mat = mat_mul(n, srefl[i], cur.mat);
      seen.emplace(nx.orbit, static_cast<int>(found.size()));
      found.push_back(std::move(nx));
    }
  }

  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (found[a].len != found[b].len) return found[a].len < found[b].len;
    return found[a].canon < found[b].canon;
  });

  canon_.reserve(found.size());
  for (int idx : order) {
    Node& nd = found[idx];
    canon_index_.emplace(nd.canon, static_cast<int>(canon_.size()));
    orbit_index_.emplace(nd.orbit, static_cast<int>(canon_.size()));
    canon_.push_back(std::move(nd.canon));
    orbit_.push_back(std::move(nd.orbit));
    len_.push_back(nd.len);
    word_.push_back(std::move(nd.word));
    mat_.push_back(std::move(nd.mat));
  }

  require(len_.back() == dim_, Errc::InvalidType, "longest representative must have length dim");

  strata_.assign(dim_ + 1, {});
  strat_pos_.assign(num_reps(), -1);
  for (int i = 0; i < num_reps(); ++i) {
    int d = dim_ - len_[i];
    strat_pos_[i] = static_cast<int>(strata_[d].size());
    strata_[d].push_back(i);
  }
}

void Space::build_dual() {
  int n = rs_.rank;
  // w0 and the longest Levi element w0_P as reduced words.
  WeylElement w0 = longest_element(rs_);
  // greedy longest element of W_P: climb with unmarked reflections only
  WeylElement w0p = identity_element(rs_);
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= n; ++i) {
      if (nodes_.count(i)) continue;
      if (w0p.canon[i - 1] > 0) {
        pick = i;
        break;
      }
    }
    if (!pick) break;
    rs_.reflect_weight(pick, w0p.canon);
    ++w0p.len;
  }
  w0p.word = reduced_word_of(rs_, w0p.canon);

  dual_.assign(num_reps(), -1);
  IVec rho(n, 1);
  // rho -> w0P(rho) once, then per rep apply the matrix and finish with w0.
  IVec base = rho;
  for (auto it = w0p.word.rbegin(); it != w0p.word.rend(); ++it) rs_.reflect_weight(*it, base);
  for (int i = 0; i < num_reps(); ++i) {
    IVec v(n);
    apply_mat(i, base, v);
    for (auto it = w0.word.rbegin(); it != w0.word.rend(); ++it) rs_.reflect_weight(*it, v);
    auto f = canon_index_.find(v);
    require(f != canon_index_.end(), Errc::InvalidType, "duality image escaped W^P");
    dual_[i] = f->second;
    require(len_[f->second] == dim_ - len_[i], Errc::InvalidType, "duality length mismatch");
  }
}

IVec Space::right_reflect_canonical(int i, int root_idx) const {
  // (w s_beta)(rho) = w(rho - <rho, beta^vee> beta)
  int n = rs_.rank;
  IVec rho(n, 1);
  long long c = rs_.pair_coroot(rho, root_idx);
  IVec v(n);
  const IVec& bw = rs_.pos_roots_w[root_idx];
  for (int k = 0; k < n; ++k) v[k] = rho[k] - c * bw[k];
  IVec out(n);
  apply_mat(i, v, out);
  return out;
}

IVec Space::right_reflect_orbit(int i, int root_idx) const {
  int n = rs_.rank;
  IVec rho_p(n, 0);
  for (int j : nodes_) rho_p[j - 1] = 1;
  long long c = rs_.pair_coroot(rho_p, root_idx);
  IVec v(n);
  const IVec& bw = rs_.pos_roots_w[root_idx];
  for (int k = 0; k < n; ++k) v[k] = rho_p[k] - c * bw[k];
  IVec out(n);
  apply_mat(i, v, out);
  return out;
}

void Space::build_covers_and_chevalley() {
  covers_.assign(num_reps(), {});
  bool pic1 = picard_rank_one();
  if (pic1) chev_.assign(num_reps(), {});
  int node = pic1 ? marked_node() : 0;

  for (int i = 0; i < num_reps(); ++i) {
    for (int k : outside_levi_) {
      // Quotient covers: the coset of w s_beta, when one step shorter, is
      // covered by w.  (Levi roots keep the coset and are skipped.)
      IVec ov = right_reflect_orbit(i, k);
      auto f = orbit_index_.find(ov);
      if (f != orbit_index_.end() && len_[f->second] == len_[i] - 1) covers_[i].push_back(f->second);

      if (!pic1) continue;
      // Chevalley transition: requires the element w s_beta itself to be a
      // minimal representative one step longer.
      IVec cv = right_reflect_canonical(i, k);
      auto g = canon_index_.find(cv);
      if (g != canon_index_.end() && len_[g->second] == len_[i] + 1) {
        long long coeff = rs_.pos_roots[k][node - 1] * rs_.sym[node - 1] / rs_.root_norm2h[k];
        // <omega_node, beta^vee>; drop the genuinely zero ones
        if (coeff != 0) chev_[g->second].emplace_back(i, coeff);
      }
    }
    std::sort(covers_[i].begin(), covers_[i].end());
    covers_[i].erase(std::unique(covers_[i].begin(), covers_[i].end()), covers_[i].end());
    if (pic1) std::sort(chev_[i].begin(), chev_[i].end());
  }
}

int Space::marked_node() const {
  require(picard_rank_one(), Errc::NotPicardRankOne, descriptor());
  return *nodes_.begin();
}

std::string Space::descriptor() const {
  std::string s;
  s += rs_.series;
  s += std::to_string(rs_.rank);
  s += "/P";
  bool first = true;
  for (int i : nodes_) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s;
}

WeylElement Space::rep_element(int i) const {
  WeylElement w;
  w.canon = canon_[i];
  w.len = len_[i];
  w.word = word_[i];
  return w;
}

const std::vector<int>& Space::stratum(int d) const {
  require(d >= 0 && d <= dim_, Errc::DegreeOutOfRange, "codimension " + std::to_string(d));
  return strata_[d];
}

std::vector<SchubertIndex> Space::degree_strata(int d) const {
  std::vector<SchubertIndex> out;
  for (int i : stratum(d)) out.push_back({i, len_[i]});
  return out;
}

const std::vector<std::pair<int, long long>>& Space::chev(int w) const {
  require(picard_rank_one(), Errc::NotPicardRankOne, descriptor());
  return chev_[w];
}

int Space::coset_of_orbit_vector(const IVec& v) const {
  auto f = orbit_index_.find(v);
  return f == orbit_index_.end() ? -1 : f->second;
}

std::optional<int> Space::find_element(const IVec& canon) const {
  auto f = canon_index_.find(canon);
  if (f == canon_index_.end()) return std::nullopt;
  return f->second;
}

bool Space::leq(int a, int b) const {
  return bruhat_leq(rs_, rep_element(a), rep_element(b));
}

std::pair<std::set<int>, std::set<int>> Space::stabilizer_roots(int w) const {
  std::set<int> stab, sigma;
  for (int i = 1; i <= rs_.rank; ++i) {
    IVec o = orbit_[w];
    rs_.reflect_weight(i, o);
    bool raises = false;
    if (o != orbit_[w]) {
      int c = coset_of_orbit_vector(o);
      raises = len_[c] > len_[w];
    }
    if (raises)
      sigma.insert(i);
    else
      stab.insert(i);
  }
  return {stab, sigma};
}

int Space::parabolic_span(const std::set<int>& q_nodes, int v) const {
  int cur = v;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= rs_.rank; ++i) {
      if (q_nodes.count(i)) continue;  // only the Levi reflections of Q act
      IVec o = orbit_[cur];
      rs_.reflect_weight(i, o);
      if (o == orbit_[cur]) continue;
      int c = coset_of_orbit_vector(o);
      if (len_[c] > len_[cur]) {
        cur = c;
        moved = true;
      }
    }
  }
  return cur;
}

bool Space::is_admissible(int v, int w) const {
  require(leq(v, w), Errc::NotASubvariety,
          "X(" + word_to_string(word_[v]) + ") is not contained in X(" + word_to_string(word_[w]) + ")");
  auto [stab_w, sigma_w] = stabilizer_roots(w);
  auto [stab_v, sigma_v] = stabilizer_roots(v);
  for (int i : sigma_w)
    if (sigma_v.count(i)) return false;
  return parabolic_span(sigma_w, v) == w;
}

std::vector<SchubertIndex> Space::minimal_generating() const {
  std::vector<int> roots(nodes_.begin(), nodes_.end());
  std::sort(roots.begin(), roots.end());
  std::set<int> hits;
  do {
    WeylElement t = element_from_word(rs_, roots);
    if (t.len != static_cast<int>(roots.size())) continue;  // not reduced
    auto f = canon_index_.find(t.canon);
    if (f != canon_index_.end()) hits.insert(f->second);
  } while (std::next_permutation(roots.begin(), roots.end()));
  std::vector<SchubertIndex> out;
  for (int i : hits) out.push_back({i, len_[i]});
  return out;
}

int Space::hyperplane_rep() const {
  require(picard_rank_one(), Errc::NotPicardRankOne, descriptor());
  const auto& s = strata_[1];
  require(s.size() == 1, Errc::NotPicardRankOne, "codimension-1 stratum is not a line");
  return s[0];
}

int Space::rep_from_word(const std::vector<int>& word) const {
  WeylElement w = element_from_word(rs_, word);
  auto f = canon_index_.find(w.canon);
  require(f != canon_index_.end(), Errc::BadInput,
          "word " + word_to_string(word) + " is not a minimal coset representative");
  return f->second;
}

Space space_from_descriptor(const std::string& desc) {
  auto slash = desc.find('/');
  require(slash != std::string::npos && slash >= 2 && slash + 2 <= desc.size() && desc[slash + 1] == 'P',
          Errc::BadInput, "space descriptor must look like B3/P2, got " + desc);
  char series = desc[0];
  int rank = std::stoi(desc.substr(1, slash - 1));
  std::set<int> nodes;
  std::string rest = desc.substr(slash + 2);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    nodes.insert(std::stoi(rest.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return Space(build_root_system(series, rank), nodes);
}

}  // namespace hsx
