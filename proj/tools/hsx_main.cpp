// hsx: exact Schubert calculus on rational homogeneous spaces G/P.
//
// Every subcommand is deterministic: identical arguments and seed produce
// byte-identical output.  --json switches from human tables to a machine
// report carrying {tool_version, space, seed, eval_points} headers.
// HSX_THREADS bounds worker threads (results do not depend on it).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hsx/report_io.hpp"

namespace {

constexpr const char* kVersion = "hsx 1.0.0";

struct CommonArgs {
  std::string type;      // "B3" or a full descriptor "B3/P2"
  std::string nodes;     // "2" or "1,2"
  std::string kind = "adjoint";
  bool json = false;
  unsigned long long seed = 12345;
};

std::set<int> parse_nodes(const std::string& s) {
  std::set<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.insert(std::stoi(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "e") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stoi(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

hsx::Space make_space(const CommonArgs& a) {
  if (a.type.find('/') != std::string::npos) return hsx::space_from_descriptor(a.type);
  hsx::require(!a.type.empty() && !a.nodes.empty(), hsx::Errc::BadInput,
               "need --type and --node (or --type B3/P2)");
  char series = a.type[0];
  int rank = std::stoi(a.type.substr(1));
  return hsx::Space(hsx::build_root_system(series, rank), parse_nodes(a.nodes));
}

hsx::AdjointModel make_model(const CommonArgs& a) {
  hsx::require(!a.type.empty(), hsx::Errc::BadInput, "need --type");
  char series = a.type[0];
  int rank = std::stoi(a.type.substr(1));
  hsx::AdjointKind k =
      a.kind == "coadjoint" ? hsx::AdjointKind::Coadjoint : hsx::AdjointKind::Adjoint;
  return hsx::AdjointModel(hsx::build_root_system(series, rank), k);
}

hsx::Json header(const CommonArgs& a, const std::string& space,
                 const hsx::RootSystem* rs = nullptr) {
  hsx::Json j;
  j["tool_version"] = kVersion;
  j["space"] = space;
  j["seed"] = a.seed;
  if (rs) j["eval_points"] = hsx::eval_point_json(hsx::make_eval_point(*rs, a.seed));
  return j;
}

void emit(const hsx::Json& j) { std::cout << j.dump(2) << "\n"; }

hsx::CohClass load_class(const hsx::Space& X, const std::string& file) {
  std::ifstream in(file);
  hsx::require(static_cast<bool>(in), hsx::Errc::BadInput, "cannot open " + file);
  hsx::Json j = hsx::Json::parse(in);
  return hsx::class_from_json(X, j);
}

std::vector<hsx::Rat> parse_rats(const std::string& s) {
  std::vector<hsx::Rat> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(hsx::rat_from_decimal(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hsx;
  CLI::App app{"exact Schubert calculus on rational homogeneous spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonArgs a;
  std::string w_word, v_word, u_word, class_file, x_values, y_values;
  int k = -1, d = -1, samples = 1000, nn = 3;
  bool big = false;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--type", a.type, "series+rank, e.g. B3, or a descriptor B3/P2");
    c->add_option("--node", a.nodes, "marked node(s), e.g. 2 or 1,2");
    c->add_option("--kind", a.kind, "adjoint | coadjoint")
        ->check(CLI::IsMember({"adjoint", "coadjoint"}));
    c->add_flag("--json", a.json, "machine-readable output");
    c->add_option("--seed", a.seed, "seed for sampled evaluation points");
    return c;
  };

  auto* space_cmd = app.add_subcommand("space", "homogeneous space queries");
  auto* sp_describe = add_common(space_cmd->add_subcommand("describe"));
  auto* sp_strata = add_common(space_cmd->add_subcommand("strata"));
  sp_strata->add_option("--d", d, "codimension")->required();
  auto* sp_dual = add_common(space_cmd->add_subcommand("dual"));
  sp_dual->add_option("--w", w_word)->required();
  auto* sp_stab = add_common(space_cmd->add_subcommand("stabilizer"));
  sp_stab->add_option("--w", w_word)->required();

  auto* adm = add_common(app.add_subcommand("admissible"));
  adm->add_option("--w", w_word)->required();
  adm->add_option("--v", v_word)->required();

  auto* mingen = add_common(app.add_subcommand("mingen"));

  auto* chev = add_common(app.add_subcommand("chevalley", "h^k times a class"));
  chev->add_option("--w", w_word, "Schubert class as a word");
  chev->add_option("--class", class_file, "class as a JSON file");
  chev->add_option("--k", k, "power of h")->default_val(1);

  auto* gram = add_common(app.add_subcommand("gram"));
  gram->add_option("--k", k)->required();

  auto* eff_cmd = add_common(app.add_subcommand("eff"));

  auto* cumb = add_common(app.add_subcommand("cumbersome"));
  cumb->add_option("--class", class_file)->required();

  auto* oracle = app.add_subcommand("oracle", "localization oracle");
  auto* triple = add_common(oracle->add_subcommand("triple", "integral of a product"));
  triple->add_option("--w", w_word)->required();
  triple->add_option("--v", v_word)->required();
  triple->add_option("--u", u_word, "optional third word");
  triple->add_option("--k", k, "extra factor h^k")->default_val(0);

  auto* adj = app.add_subcommand("adjoint", "adjoint/coadjoint models");
  auto* adj_build = add_common(adj->add_subcommand("build"));
  auto* adj_coeffs = add_common(adj->add_subcommand("coeffs"));
  auto* adj_qform = add_common(adj->add_subcommand("qform"));
  adj_qform->add_option("--x", x_values, "positive rationals, comma separated");
  auto* adj_posdef = add_common(adj->add_subcommand("posdef"));
  adj_posdef->add_option("--samples", samples)->default_val(1000);
  auto* adj_qid = add_common(adj->add_subcommand("qidentity"));
  auto* adj_bndet = add_common(adj->add_subcommand("bndet"));
  adj_bndet->add_option("--n", nn, "rank, >= 3")->required();
  auto* adj_sigma = add_common(adj->add_subcommand("sigma-checks"));
  auto* adj_mm = add_common(adj->add_subcommand("mmatrix"));
  adj_mm->add_option("--y", y_values, "numeric divisor coordinates");

  auto* table = app.add_subcommand("table", "reference tables");
  auto* table_eff = add_common(table->add_subcommand("eff"));
  table_eff->add_flag("--big", big, "include the E7/E8 rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sp_describe->parsed()) {
      Space X = make_space(a);
      Json j = space_describe_json(X);
      if (a.json) {
        Json out = header(a, X.descriptor(), &X.rs());
        out.update(j);
        emit(out);
      } else {
        std::cout << X.descriptor() << ": dim " << X.dim() << ", " << X.num_reps()
                  << " classes\nstrata:";
        for (int dd = 0; dd <= X.dim(); ++dd) std::cout << " " << X.stratum(dd).size();
        std::cout << "\n";
      }
    } else if (sp_strata->parsed()) {
      Space X = make_space(a);
      Json out = header(a, X.descriptor(), &X.rs());
      Json words = Json::array();
      for (const auto& si : X.degree_strata(d)) words.push_back(X.rep_word(si.rep));
      out["d"] = d;
      out["classes"] = words;
      if (a.json) {
        emit(out);
      } else {
        for (const auto& si : X.degree_strata(d))
          std::cout << word_to_string(X.rep_word(si.rep)) << "\n";
      }
    } else if (sp_dual->parsed()) {
      Space X = make_space(a);
      int rep = X.rep_from_word(parse_word(w_word));
      int dl = X.dual(rep);
      if (a.json) {
        Json out = header(a, X.descriptor(), &X.rs());
        out["w"] = X.rep_word(rep);
        out["dual"] = X.rep_word(dl);
        emit(out);
      } else {
        std::cout << word_to_string(X.rep_word(dl)) << "\n";
      }
    } else if (sp_stab->parsed()) {
      Space X = make_space(a);
      int rep = X.rep_from_word(parse_word(w_word));
      auto [stab, sigma] = X.stabilizer_roots(rep);
      if (a.json) {
        Json out = header(a, X.descriptor(), &X.rs());
        out["stabilizer_levi_nodes"] = stab;
        out["sigma"] = sigma;
        emit(out);
      } else {
        std::cout << "Sigma^P(w) = {";
        bool first = true;
        for (int i : sigma) {
          std::cout << (first ? "" : ",") << i;
          first = false;
        }
        std::cout << "}\n";
      }
    } else if (adm->parsed()) {
      Space X = make_space(a);
      int w = X.rep_from_word(parse_word(w_word));
      int v = X.rep_from_word(parse_word(v_word));
      bool ok = X.is_admissible(v, w);
      if (a.json) {
        Json out = header(a, X.descriptor(), &X.rs());
        out["admissible"] = ok;
        emit(out);
      } else {
        std::cout << (ok ? "true" : "false") << "\n";
      }
    } else if (mingen->parsed()) {
      Space X = make_space(a);
      Json out = header(a, X.descriptor(), &X.rs());
      Json words = Json::array();
      for (const auto& si : X.minimal_generating()) words.push_back(X.rep_word(si.rep));
      out["minimal_generating"] = words;
      if (a.json)
        emit(out);
      else
        for (const auto& si : X.minimal_generating())
          std::cout << word_to_string(X.rep_word(si.rep)) << "\n";
    } else if (chev->parsed()) {
      Space X = make_space(a);
      CohClass c = class_file.empty() ? schubert_class(X, X.rep_from_word(parse_word(w_word)))
                                      : load_class(X, class_file);
      CohClass r = h_mult_power(X, c, k);
      Json out = header(a, X.descriptor(), &X.rs());
      out["k"] = k;
      out["result"] = class_to_json(X, r);
      if (a.json)
        emit(out);
      else
        std::cout << class_to_json(X, r).dump(2) << "\n";
    } else if (gram->parsed()) {
      Space X = make_space(a);
      GramReport g = gram_matrix(X, k);
      if (a.json) {
        Json out = header(a, X.descriptor(), &X.rs());
        out.update(gram_to_json(X, g));
        emit(out);
      } else {
        std::cout << "( , )_{h^" << k << "} on the codim-" << g.stratum_codim
                  << " stratum: " << definiteness_name(g.verdict) << "\n";
        for (const auto& row : g.matrix) {
          for (const Int& v : row) std::cout << v.str() << " ";
          std::cout << "\n";
        }
      }
    } else if (eff_cmd->parsed()) {
      Space X = make_space(a);
      EffReport r = eff(X);
      if (a.json) {
        Json out = header(a, X.descriptor(), &X.rs());
        out.update(eff_to_json(X, r));
        emit(out);
      } else {
        std::cout << r.eff << "\n";
      }
    } else if (cumb->parsed()) {
      Space X = make_space(a);
      bool ok = is_cumbersome(X, load_class(X, class_file));
      if (a.json) {
        Json out = header(a, X.descriptor(), &X.rs());
        out["cumbersome"] = ok;
        emit(out);
      } else {
        std::cout << (ok ? "true" : "false") << "\n";
      }
    } else if (triple->parsed()) {
      Space X = make_space(a);
      EvalPoint pt = make_eval_point(X.rs(), a.seed);
      std::vector<int> factors;
      factors.push_back(X.rep_from_word(parse_word(w_word)));
      factors.push_back(X.rep_from_word(parse_word(v_word)));
      if (!u_word.empty()) factors.push_back(X.rep_from_word(parse_word(u_word)));
      factors.insert(factors.end(), k, X.hyperplane_rep());
      Int r = integrate(X, factors, pt);
      if (a.json) {
        Json out = header(a, X.descriptor(), &X.rs());
        out["integral"] = to_decimal(r);
        emit(out);
      } else {
        std::cout << r.str() << "\n";
      }
    } else if (adj_build->parsed()) {
      AdjointModel m = make_model(a);
      Json out = header(a, m.space().descriptor(), &m.space().rs());
      out["kind"] = adjoint_kind_name(m.kind());
      out["classes"] = m.space().num_reps();
      out["relevant_simples"] = m.relevant_simples();
      Json pairs = Json::array();
      for (auto [s, t] : m.pair_set())
        pairs.push_back({m.relevant_simples()[s], m.relevant_simples()[t]});
      out["pair_set"] = pairs;
      if (a.json) {
        emit(out);
      } else {
        std::cout << m.descriptor() << ": " << m.space().num_reps() << " classes, "
                  << m.n_rel() << " relevant simples, pair set of " << m.pair_set().size()
                  << "\n";
      }
    } else if (adj_coeffs->parsed()) {
      AdjointModel m = make_model(a);
      Json out = header(a, m.space().descriptor(), &m.space().rs());
      Json tab = Json::array();
      for (int t = 0; t < m.n_rel(); ++t) {
        Json row = Json::array();
        for (int t2 = 0; t2 < m.n_rel(); ++t2) row.push_back(m.chevalley_coeff(t, t2));
        tab.push_back(row);
      }
      out["chevalley_table"] = tab;
      out["cross_checked"] = true;
      if (a.json) {
        emit(out);
      } else {
        for (int t = 0; t < m.n_rel(); ++t) {
          for (int t2 = 0; t2 < m.n_rel(); ++t2) std::cout << m.chevalley_coeff(t, t2) << " ";
          std::cout << "\n";
        }
      }
    } else if (adj_qform->parsed()) {
      AdjointModel m = make_model(a);
      std::vector<std::string> names;
      for (int t = 0; t < m.n_rel(); ++t) names.push_back("x" + std::to_string(t + 1));
      for (int t = 0; t < m.n_rel(); ++t) names.push_back("y" + std::to_string(t + 1));
      Json out = header(a, m.space().descriptor(), &m.space().rs());
      if (x_values.empty()) {
        SymbolicForm q = q_form(m);
        out["q_times_D"] = q.num.to_string(names, 2);
        out["D"] = q.den.to_string(names, 2);
      } else {
        Poly q = q_form(m, parse_rats(x_values));
        out["q"] = q.to_string(names, 2);
      }
      if (a.json)
        emit(out);
      else
        std::cout << (x_values.empty() ? out["q_times_D"].get<std::string>() + "  over D = " +
                                             out["D"].get<std::string>()
                                       : out["q"].get<std::string>())
                  << "\n";
    } else if (adj_posdef->parsed()) {
      AdjointModel m = make_model(a);
      PosdefReport r = check_posdef(m, samples, a.seed);
      Json out = header(a, m.space().descriptor(), &m.space().rs());
      out.update(posdef_to_json(r));
      if (a.json)
        emit(out);
      else
        std::cout << (r.all_pass ? "positive definite at all sampled points"
                                 : "counterexample found")
                  << "\n";
      if (!r.all_pass) return 1;
    } else if (adj_qid->parsed()) {
      AdjointModel m = make_model(a);
      QIdentityReport r = verify_q_identity(m);
      Json out = header(a, m.space().descriptor(), &m.space().rs());
      out.update(qidentity_to_json(r));
      if (a.json)
        emit(out);
      else
        std::cout << (r.completed_ok ? "q = Q(L) holds" : "identity FAILED") << "\n";
      if (!r.completed_ok) return 1;
    } else if (adj_bndet->parsed()) {
      bool long_roots = a.type.empty() || a.type[0] != 'C';
      BnCnReport r = bn_cn_determinant(nn, long_roots);
      Json out = header(a, (long_roots ? "B" : "C") + std::to_string(nn));
      out.update(bncn_to_json(r));
      if (a.json)
        emit(out);
      else
        std::cout << (r.matches ? "determinant matches the closed form" : "MISMATCH") << "\n";
      if (!r.matches) return 1;
    } else if (adj_sigma->parsed()) {
      AdjointModel m = make_model(a);
      SigmaChecksReport r = coadjoint_sigma_checks(m);
      Json out = header(a, m.space().descriptor(), &m.space().rs());
      out.update(sigma_to_json(r));
      if (a.json)
        emit(out);
      else
        std::cout << (r.all_pass ? "all checks pass" : "FAILED") << "\n";
      if (!r.all_pass) return 1;
    } else if (adj_mm->parsed()) {
      AdjointModel m = make_model(a);
      std::optional<std::vector<Rat>> y;
      if (!y_values.empty()) y = parse_rats(y_values);
      MMatrixReport r = m_matrix(m, default_middle_class(m), y);
      if (a.json) {
        Json out = header(a, m.space().descriptor(), &m.space().rs());
        out.update(mmatrix_to_json(r));
        emit(out);
      } else {
        std::cout << "row i*(h): ";
        for (const Int& v : r.x_row) std::cout << v.str() << " ";
        for (const auto& s : r.right_row1) std::cout << "| " << s << " ";
        std::cout << "\nrow [D]:  ";
        for (const auto& s : r.y_row) std::cout << s << " ";
        for (const auto& s : r.right_row2) std::cout << "| " << s << " ";
        std::cout << "\nleft 2x2 minors:";
        for (const auto& s : r.left_minors) std::cout << " " << s << ";";
        if (r.numeric)
          std::cout << "\nleft block rank one: " << (r.left_rank_one ? "yes" : "no");
        std::cout << "\n";
      }
    } else if (table_eff->parsed()) {
      auto rows = run_eff_table(big);
      bool all = true;
      if (a.json) {
        Json out = header(a, "table");
        out["rows"] = eff_table_to_json(rows);
        emit(out);
        for (const auto& r : rows) all = all && r.pass;
      } else {
        for (const auto& r : rows) {
          std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.label << "  (" << r.space
                    << ", dim " << r.dim << "): eff = " << r.got << ", expected " << r.expected;
          if (!r.error.empty()) std::cout << "  [" << r.error << "]";
          std::cout << "\n";
          all = all && r.pass;
        }
      }
      if (!all) return 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
