#pragma once

// JSON serialization of classes and reports, plus the effectiveness table
// runner shared by the CLI and the acceptance suite.  All integers that can
// exceed 64 bits travel as decimal strings; emission order is fixed so equal
// inputs produce identical bytes.

#include <json.hpp>

#include "hsx/adjoint.hpp"
#include "hsx/cohomology.hpp"
#include "hsx/localize.hpp"

namespace hsx {

using Json = nlohmann::ordered_json;

Json class_to_json(const Space& X, const CohClass& c);
CohClass class_from_json(const Space& X, const Json& j);

Json space_describe_json(const Space& X);
Json gram_to_json(const Space& X, const GramReport& g);
Json eff_to_json(const Space& X, const EffReport& r);
Json eval_point_json(const EvalPoint& pt);
Json posdef_to_json(const PosdefReport& r);
Json qidentity_to_json(const QIdentityReport& r);
Json sigma_to_json(const SigmaChecksReport& r);
Json bncn_to_json(const BnCnReport& r);
Json mmatrix_to_json(const MMatrixReport& r);

// One row of the effectiveness table: a human label, the space descriptor,
// and the value the table asserts (either absolute or dim - offset).
struct EffTableRow {
  std::string label;
  std::string space;
  int expected_abs = -1;
  int expected_dim_minus = -1;  // expected = dim - this, when >= 0
  bool big = false;
};

const std::vector<EffTableRow>& eff_table_rows();

struct EffTableResult {
  std::string label;
  std::string space;
  int dim = 0;
  int expected = 0;
  int got = -1;
  bool pass = false;
  std::string error;  // per-row failure reported inline
};

std::vector<EffTableResult> run_eff_table(bool include_big, bool only_big = false);

Json eff_table_to_json(const std::vector<EffTableResult>& rows);

}  // namespace hsx
