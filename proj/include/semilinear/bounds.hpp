// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semilinear/complement.hpp"
#include "semilinear/diophantine.hpp"
#include "semilinear/semilinear_set.hpp"

namespace semilinear {

/// Constructions whose output size is bounded by a closed formula.
enum class OperationKind {
  Union,
  Intersect,
  IntersectMany,
  Preimage,
  Decompose,
  ComplementLinearOrigin,
  ComplementLinear,
  ComplementIndependent,
  Complement,
};

std::string_view kind_name(OperationKind kind);
/// Inverse of kind_name; throws InvalidInput for an unknown name.
OperationKind parse_kind(std::string_view name);

enum class BoundStatus { Certified, Inconclusive, Violated };
std::string_view status_name(BoundStatus status);

/// Metrics of the operands and of the result of one construction.
///
/// Operand conventions: union and intersect take two operands,
/// intersect-many at least one; every other kind takes exactly one:
/// decompose, complement-linear and complement-linear-origin the linear set
/// L(x0, P) itself, complement-independent the independent union H, and
/// complement / preimage the input set S.
struct BoundQuery {
  OperationKind kind = OperationKind::Union;
  std::size_t dimension = 1;
  std::vector<Metrics> operands;
  Metrics result;
  /// Preimage only: k1 (columns of H) and ||H||. `dimension` is k2.
  std::size_t source_dimension = 0;
  Integer matrix_norm = 0;
};

/// Query for `kind` from the actual operands and result. `h` is required
/// for preimage and ignored otherwise.
BoundQuery make_query(OperationKind kind, std::span<const SemilinearSet> inputs, const SemilinearSet& output,
                      const IntegerMatrix* h = nullptr);

/// One query per intermediate result of a traced complement: every
/// decomposition, origin complement and linear complement, the n-ary
/// intersection, the independent-period complement and the final result.
std::vector<BoundQuery> stage_queries(const ComplementTrace& trace);

/// One inequality "measured <= bound". In log2 form the endpoints describe
/// log2(bound) and the comparison is made against log2(measured).
struct BoundCheck {
  std::string metric;
  std::string formula;
  bool log2_form = false;
  Integer measured;
  std::string bound_lower;
  std::string bound_upper;
  BoundStatus status = BoundStatus::Certified;
};

/// A derived parameter of the formulas; exact when `value` is set,
/// otherwise given by outward-rounded endpoints.
struct BoundParameter {
  std::string name;
  std::optional<Integer> value;
  std::string lower;
  std::string upper;
};

struct BoundReport {
  OperationKind kind = OperationKind::Union;
  BoundQuery query;
  /// Decimal digits of working precision used for the final evaluation.
  int precision_digits = 0;
  std::vector<BoundParameter> parameters;
  std::vector<BoundCheck> checks;
  /// Violated if any check is, else Inconclusive if any check is, else Certified.
  BoundStatus status = BoundStatus::Certified;
};

/// Evaluates every formula of `query.kind` with interval arithmetic at
/// `digits` decimal digits, doubling the precision while the status is
/// Inconclusive and the cap allows it.
BoundReport bound_report(const BoundQuery& query, int digits = 32, int max_digits = 512);

nlohmann::json to_json(const BoundReport& report);

}  // namespace semilinear
