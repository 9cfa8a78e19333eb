#include "hsx/report_io.hpp"

namespace hsx {

Json class_to_json(const Space& X, const CohClass& c) {
  Json j;
  j["codim"] = c.codim;
  Json coeffs = Json::array();
  for (const auto& [rep, v] : c.coeffs) {
    Json e;
    e["word"] = X.rep_word(rep);
    e["coeff"] = to_decimal(v);
    coeffs.push_back(std::move(e));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

CohClass class_from_json(const Space& X, const Json& j) {
  CohClass c;
  c.codim = j.at("codim").get<int>();
  for (const Json& e : j.at("coeffs")) {
    std::vector<int> word = e.at("word").get<std::vector<int>>();
    int rep = X.rep_from_word(word);
    require(X.codim(rep) == c.codim, Errc::DegreeMismatch,
            "word " + word_to_string(word) + " does not index a codim-" +
                std::to_string(c.codim) + " class");
    Int v = int_from_decimal(e.at("coeff").get<std::string>());
    if (v != 0) c.coeffs[rep] += v;
  }
  return c;
}

Json space_describe_json(const Space& X) {
  Json j;
  j["space"] = X.descriptor();
  j["dim"] = X.dim();
  j["classes"] = X.num_reps();
  j["picard_rank_one"] = X.picard_rank_one();
  Json strata = Json::array();
  for (int d = 0; d <= X.dim(); ++d) strata.push_back(X.stratum(d).size());
  j["strata"] = std::move(strata);
  return j;
}

Json gram_to_json(const Space& X, const GramReport& g) {
  Json j;
  j["k"] = g.k;
  j["stratum_codim"] = g.stratum_codim;
  Json basis = Json::array();
  for (int rep : g.basis) basis.push_back(X.rep_word(rep));
  j["basis"] = std::move(basis);
  Json m = Json::array();
  for (const auto& row : g.matrix) {
    Json r = Json::array();
    for (const Int& v : row) r.push_back(to_decimal(v));
    m.push_back(std::move(r));
  }
  j["matrix"] = std::move(m);
  j["verdict"] = definiteness_name(g.verdict);
  j["witness_minor"] = g.witness;
  return j;
}

Json eff_to_json(const Space& X, const EffReport& r) {
  Json j;
  j["eff"] = r.eff;
  j["coeff"] = r.coeff;
  Json reports = Json::array();
  for (const GramReport& g : r.reports) reports.push_back(gram_to_json(X, g));
  j["scans"] = std::move(reports);
  return j;
}

Json eval_point_json(const EvalPoint& pt) {
  Json j;
  j["seed"] = pt.seed;
  Json p = Json::array(), s = Json::array();
  for (const Rat& v : pt.primary) p.push_back(to_decimal(v));
  for (const Rat& v : pt.secondary) s.push_back(to_decimal(v));
  j["primary"] = std::move(p);
  j["secondary"] = std::move(s);
  return j;
}

Json posdef_to_json(const PosdefReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["all_pass"] = r.all_pass;
  if (!r.all_pass) {
    j["first_failure"] = r.first_failure;
    j["failure_x"] = r.failure_x;
  }
  j["symbolic_tier_applicable"] = r.symbolic_tier_applicable;
  j["symbolic_tier_certified"] = r.symbolic_tier_certified;
  j["minor_certificates"] = r.minor_certificates;
  return j;
}

Json qidentity_to_json(const QIdentityReport& r) {
  Json j;
  j["completed_matrix_identity"] = r.completed_ok;
  j["literal_matrix_identity"] = r.literal_ok;
  j["q_equals_qprime"] = r.q_equals_qprime;
  j["difference"] = r.difference;
  return j;
}

Json sigma_to_json(const SigmaChecksReport& r) {
  Json j;
  j["space"] = r.space;
  j["codim_sigma"] = r.codim_sigma;
  j["nonzero_in_range"] = r.nonzero_in_range;
  j["min_annihilator_codim"] = r.min_annihilator_codim;
  j["annihilator_is_neg_alpha1"] = r.annihilator_is_neg_alpha1;
  j["degree_bound_holds"] = r.degree_bound_holds;
  j["all_pass"] = r.all_pass;
  return j;
}

Json bncn_to_json(const BnCnReport& r) {
  Json j;
  j["n"] = r.n;
  j["roots"] = r.long_roots ? "long" : "short";
  j["matches_closed_form"] = r.matches;
  j["determinant"] = r.determinant;
  return j;
}

Json mmatrix_to_json(const MMatrixReport& r) {
  Json j;
  Json xr = Json::array();
  for (const Int& v : r.x_row) xr.push_back(to_decimal(v));
  j["x_row"] = std::move(xr);
  j["y_row"] = r.y_row;
  j["right_row1"] = r.right_row1;
  j["right_row2"] = r.right_row2;
  j["left_minors"] = r.left_minors;
  j["numeric"] = r.numeric;
  j["left_rank_one"] = r.left_rank_one;
  return j;
}

const std::vector<EffTableRow>& eff_table_rows() {
  static const std::vector<EffTableRow> rows = [] {
    std::vector<EffTableRow> t;
    auto add = [&](std::string label, std::string space, int abs, int dm = -1, bool big = false) {
      t.push_back({std::move(label), std::move(space), abs, dm, big});
    };
    for (int n = 1; n <= 8; ++n)
      add("P^" + std::to_string(n), "A" + std::to_string(n) + "/P1", n % 2 == 0 ? 0 : 1);
    for (int m = 3; m <= 10; ++m) {
      std::string space = m % 2 ? "B" + std::to_string((m + 1) / 2) + "/P1"
                                : "D" + std::to_string(m / 2 + 1) + "/P1";
      int e = m % 2 ? 1 : (m % 4 == 0 ? 0 : 2);
      add("Q^" + std::to_string(m), space, e);
    }
    for (int n = 4; n <= 8; ++n)
      add("G(2," + std::to_string(n) + ")", "A" + std::to_string(n - 1) + "/P2", 0);
    for (int n = 2; n <= 5; ++n)
      add("Gw(2," + std::to_string(2 * n) + ")", "C" + std::to_string(n) + "/P2", 1);
    for (int n = 2; n <= 4; ++n)
      add("GQ(2," + std::to_string(2 * n + 1) + ")", "B" + std::to_string(n) + "/P2", 1);
    add("GQ(2,8)", "D4/P2", 1);
    add("GQ(2,10)", "D5/P2", 9);
    add("F4/P1", "F4/P1", 1);
    add("F4/P4", "F4/P4", 1);
    add("G2/P1", "G2/P1", 1);
    add("G2/P2", "G2/P2", 1);
    add("E6/P1", "E6/P1", 0);
    add("E7/P1", "E7/P1", 1, -1, true);
    add("E7/P6", "E7/P6", -1, 8, true);
    add("E7/P7", "E7/P7", -1, 8, true);
    add("E8/P1", "E8/P1", -1, 12, true);
    add("E8/P7", "E8/P7", -1, 8, true);
    add("E8/P8", "E8/P8", 1, -1, true);
    return t;
  }();
  return rows;
}

std::vector<EffTableResult> run_eff_table(bool include_big, bool only_big) {
  std::vector<EffTableResult> out;
  for (const EffTableRow& row : eff_table_rows()) {
    if (row.big && !include_big) continue;
    if (only_big && !row.big) continue;
    EffTableResult r;
    r.label = row.label;
    r.space = row.space;
    try {
      Space X = space_from_descriptor(row.space);
      r.dim = X.dim();
      r.expected =
          row.expected_dim_minus >= 0 ? X.dim() - row.expected_dim_minus : row.expected_abs;
      r.got = eff(X).eff;
      r.pass = r.got == r.expected;
    } catch (const Error& e) {
      r.error = e.what();
      r.pass = false;
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json eff_table_to_json(const std::vector<EffTableResult>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["label"] = r.label;
    e["space"] = r.space;
    e["dim"] = r.dim;
    e["expected"] = r.expected;
    e["computed"] = r.got;
    e["pass"] = r.pass;
    if (!r.error.empty()) e["error"] = r.error;
    j.push_back(std::move(e));
  }
  return j;
}

}  // namespace hsx
