// SPDX-License-Identifier: Apache-2.0
#include "semilinear/ops.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "semilinear/errors.hpp"
#include "semilinear/parallel.hpp"

namespace semilinear {

void enforce_count(const ResourceLimits& limits, std::size_t components, const std::string& stage) {
  if (components > limits.max_components) {
    throw ResourceLimitError(stage, "components", std::to_string(components));
  }
}

void enforce_norm(const ResourceLimits& limits, const Integer& norm, const std::string& stage) {
  const std::size_t bits = sgn(norm) == 0 ? 0 : mpz_sizeinbase(norm.get_mpz_t(), 2);
  if (bits > limits.max_norm_bits) throw ResourceLimitError(stage, "norm_bits", std::to_string(bits));
}

void enforce(const ResourceLimits& limits, const SemilinearSet& set, const std::string& stage) {
  const Metrics m = metrics(set);
  enforce_count(limits, m.index_size, stage);
  enforce_norm(limits, m.nu, stage);
}

namespace {

void require_same_dimension(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + " of sets with dimensions " + std::to_string(a) + " and " +
                         std::to_string(b));
  }
}

std::vector<Integer> as_integers(const NatVector& v) { return {v.entries().begin(), v.entries().end()}; }

std::vector<Integer> negated(const NatVector& v) {
  std::vector<Integer> out(v.dimension());
  for (std::size_t i = 0; i < v.dimension(); ++i) out[i] = -v[i];
  return out;
}

// sum_r coeffs[r] * vectors[r]; trailing coefficients beyond vectors.size() are ignored.
NatVector combine(std::span<const NatVector> vectors, const NatVector& coeffs, std::size_t dimension) {
  std::vector<Integer> out(dimension, Integer(0));
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (sgn(coeffs[r]) == 0) continue;
    for (std::size_t i = 0; i < dimension; ++i) out[i] += coeffs[r] * vectors[r][i];
  }
  return NatVector(std::move(out));
}

}  // namespace

SemilinearSet union_of(const SemilinearSet& a, const SemilinearSet& b) {
  require_same_dimension(a.dimension(), b.dimension(), "union");
  std::vector<LinearComponent> comps(a.components().begin(), a.components().end());
  comps.insert(comps.end(), b.components().begin(), b.components().end());
  return SemilinearSet(a.dimension(), std::move(comps));
}

namespace {

void require_linear_operands(const NatVector& c1, std::span<const NatVector> p1, const NatVector& c2,
                             std::span<const NatVector> p2) {
  const std::size_t k = c1.dimension();
  require_same_dimension(k, c2.dimension(), "intersection");
  for (const auto& v : p1) require_same_dimension(k, v.dimension(), "intersection");
  for (const auto& v : p2) require_same_dimension(k, v.dimension(), "intersection");
}

// H = (x_1 | ... | x_p | -y_1 | ... | -y_q) with right-hand side `rhs`.
DiophantineSystem block_system(std::span<const NatVector> p1, std::span<const NatVector> p2,
                               std::vector<Integer> rhs) {
  std::vector<std::vector<Integer>> columns;
  for (const auto& x : p1) columns.push_back(as_integers(x));
  for (const auto& y : p2) columns.push_back(negated(y));
  return DiophantineSystem(IntegerMatrix::from_columns(columns), std::move(rhs));
}

// c1 + tau(C) for the minimal solutions C of H (lambda, mu) = c2 - c1.
std::vector<NatVector> intersection_constants(const NatVector& c1, std::span<const NatVector> p1,
                                              const NatVector& c2, std::span<const NatVector> p2) {
  const std::size_t k = c1.dimension();
  if (p1.empty() && p2.empty()) {
    if (c1 == c2) return {c1};
    return {};
  }
  std::vector<Integer> rhs(k);
  for (std::size_t i = 0; i < k; ++i) rhs[i] = c2[i] - c1[i];
  std::vector<NatVector> out;
  for (const auto& c : minimal_solutions(block_system(p1, p2, std::move(rhs)), false).solutions) {
    out.push_back(c1 + combine(p1, c, k));
  }
  return out;
}

// tau(Q) for the minimal nonzero solutions Q of H (lambda, mu) = 0.
std::vector<NatVector> intersection_periods(std::span<const NatVector> p1, std::span<const NatVector> p2,
                                            std::size_t k) {
  if (p1.empty() && p2.empty()) return {};
  std::vector<NatVector> out;
  for (const auto& q : minimal_solutions(block_system(p1, p2, std::vector<Integer>(k, Integer(0))), true).solutions) {
    out.push_back(combine(p1, q, k));
  }
  return out;
}

}  // namespace

std::optional<LinearComponent> intersect_linear(const NatVector& c1, std::span<const NatVector> p1,
                                                const NatVector& c2, std::span<const NatVector> p2) {
  require_linear_operands(c1, p1, c2, p2);
  std::vector<NatVector> constants = intersection_constants(c1, p1, c2, p2);
  if (constants.empty()) return std::nullopt;
  return LinearComponent(std::move(constants), intersection_periods(p1, p2, c1.dimension()));
}

SemilinearSet intersect(const SemilinearSet& a, const SemilinearSet& b, const ResourceLimits* limits) {
  require_same_dimension(a.dimension(), b.dimension(), "intersection");
  const std::size_t k = a.dimension();
  const SemilinearSet ea = expand_constants(a);
  const SemilinearSet eb = expand_constants(b);
  const auto lhs = ea.components();
  const auto rhs = eb.components();
  const std::size_t pairs = lhs.size() * rhs.size();

  auto constants = parallel_map(pairs, [&](std::size_t idx) {
    const LinearComponent& x = lhs[idx / rhs.size()];
    const LinearComponent& y = rhs[idx % rhs.size()];
    return intersection_constants(x.constants().front(), x.periods(), y.constants().front(), y.periods());
  });

  // The homogeneous part depends only on the two period sets, which
  // expanded components share; solve it once per distinct pair.
  using PeriodKey = std::pair<std::vector<NatVector>, std::vector<NatVector>>;
  auto key_of = [&](std::size_t idx) {
    const auto px = lhs[idx / rhs.size()].periods();
    const auto py = rhs[idx % rhs.size()].periods();
    return PeriodKey{{px.begin(), px.end()}, {py.begin(), py.end()}};
  };
  std::map<PeriodKey, std::size_t> slot;
  std::vector<PeriodKey> keys;
  for (std::size_t idx = 0; idx < pairs; ++idx) {
    if (constants[idx].empty()) continue;
    auto key = key_of(idx);
    if (slot.emplace(key, keys.size()).second) keys.push_back(std::move(key));
  }
  const auto periods = parallel_map(keys.size(), [&](std::size_t i) {
    return intersection_periods(keys[i].first, keys[i].second, k);
  });

  std::vector<LinearComponent> comps;
  for (std::size_t idx = 0; idx < pairs; ++idx) {
    if (constants[idx].empty()) continue;
    LinearComponent c(std::move(constants[idx]), periods[slot.at(key_of(idx))]);
    if (limits) enforce_norm(*limits, std::max(norm_of(c.constants()), norm_of(c.periods())), "intersect");
    comps.push_back(std::move(c));
  }
  SemilinearSet result(k, std::move(comps));
  if (limits) enforce(*limits, result, "intersect");
  return result;
}

SemilinearSet intersect_many(std::span<const SemilinearSet> sets, const ResourceLimits* limits) {
  if (sets.empty()) throw InvalidInput("intersect_many needs at least one operand");
  for (const auto& s : sets) require_same_dimension(sets.front().dimension(), s.dimension(), "intersection");

  std::vector<SemilinearSet> round(sets.begin(), sets.end());
  std::sort(round.begin(), round.end());
  while (round.size() > 1) {
    std::vector<SemilinearSet> next;
    next.reserve((round.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < round.size(); i += 2) next.push_back(intersect(round[i], round[i + 1], limits));
    if (round.size() % 2 == 1) next.push_back(std::move(round.back()));
    round = std::move(next);
  }
  return std::move(round.front());
}

SemilinearSet preimage(const IntegerMatrix& h, const SemilinearSet& s) {
  if (h.rows() != s.dimension()) {
    throw DimensionError("homomorphism matrix has " + std::to_string(h.rows()) + " rows, set has dimension " +
                         std::to_string(s.dimension()));
  }
  if (!h.is_nonnegative()) throw InvalidInput("homomorphism matrix must have non-negative entries");
  const std::size_t k1 = h.cols();

  const SemilinearSet expanded = expand_constants(s);
  const auto comps = expanded.components();
  auto pieces = parallel_map(comps.size(), [&](std::size_t idx) -> std::optional<LinearComponent> {
    const LinearComponent& comp = comps[idx];
    std::vector<std::vector<Integer>> columns;
    for (std::size_t c = 0; c < k1; ++c) columns.push_back(h.column(c));
    for (const auto& y : comp.periods()) columns.push_back(negated(y));
    const NatVector& c = comp.constants().front();
    const LinearSolution sol =
        solve_lcq(DiophantineSystem(IntegerMatrix::from_columns(columns), as_integers(c)));
    if (sol.constants.empty()) return std::nullopt;
    auto project = [&](const NatVector& v) {
      return NatVector(std::vector<Integer>(v.entries().begin(), v.entries().begin() + static_cast<std::ptrdiff_t>(k1)));
    };
    std::vector<NatVector> constants;
    std::vector<NatVector> periods;
    for (const auto& v : sol.constants) constants.push_back(project(v));
    for (const auto& v : sol.periods) periods.push_back(project(v));
    return LinearComponent(std::move(constants), std::move(periods));
  });

  std::vector<LinearComponent> out;
  for (auto& p : pieces) {
    if (p) out.push_back(std::move(*p));
  }
  return SemilinearSet(k1, std::move(out));
}

}  // namespace semilinear
