// SPDX-License-Identifier: Apache-2.0
#include "semilinear/complement.hpp"

#include <algorithm>
#include <set>

#include "semilinear/diophantine.hpp"
#include "semilinear/errors.hpp"
#include "semilinear/ops.hpp"
#include "semilinear/parallel.hpp"

namespace semilinear {

namespace {

std::vector<Integer> as_integers(const NatVector& v) { return {v.entries().begin(), v.entries().end()}; }

std::vector<Integer> scaled_column(const NatVector& v, long factor) {
  std::vector<Integer> out(v.dimension());
  for (std::size_t i = 0; i < v.dimension(); ++i) out[i] = v[i] * factor;
  return out;
}

NatVector head(const NatVector& v, std::size_t n) {
  return NatVector(std::vector<Integer>(v.entries().begin(), v.entries().begin() + static_cast<std::ptrdiff_t>(n)));
}

void require_dimension(std::span<const NatVector> vectors, std::size_t k) {
  for (const auto& v : vectors) {
    if (v.dimension() != k) {
      throw DimensionError("period " + v.to_string() + " does not have dimension " + std::to_string(k));
    }
  }
}

std::size_t rank_of(std::span<const NatVector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<Integer>> cols;
  for (const auto& v : vectors) cols.push_back(as_integers(v));
  return rank(IntegerMatrix::from_columns(cols));
}

// One component pi(L(C, Q)) of the complement construction, where (C, Q) are
// minimal solutions over (y, a) and pi keeps the first k coordinates.
std::optional<LinearComponent> project_component(std::vector<NatVector> constants,
                                                 std::span<const NatVector> periods, std::size_t k) {
  if (constants.empty()) return std::nullopt;
  std::vector<NatVector> c;
  std::vector<NatVector> q;
  for (const auto& v : constants) c.push_back(head(v, k));
  for (const auto& v : periods) q.push_back(head(v, k));
  return LinearComponent(std::move(c), std::move(q));
}

class Decomposer {
 public:
  Decomposer(std::size_t k, const ResourceLimits& limits) : k_(k), limits_(limits) {}

  void run(const NatVector& c, std::vector<NatVector> periods) {
    canonicalize(periods);
    if (!seen_.emplace(c, periods).second) return;
    if (is_independent(periods)) {
      out_.emplace_back(std::vector<NatVector>{c}, periods);
      enforce_count(limits_, out_.size(), "decompose_independent");
      enforce_norm(limits_, c.norm(), "decompose_independent");
      return;
    }
    const std::size_t m = periods.size();
    for (std::size_t size = 1; size <= m / 2; ++size) {
      std::vector<bool> chosen(m, false);
      std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(size), true);
      // prev_permutation over a true-prefix mask walks subsets in
      // lexicographic order of their index lists.
      do {
        std::vector<std::size_t> xs;
        std::vector<std::size_t> ys;
        for (std::size_t i = 0; i < m; ++i) (chosen[i] ? xs : ys).push_back(i);
        if (split_along_dependency(c, periods, xs, ys)) return;
      } while (std::prev_permutation(chosen.begin(), chosen.end()));
    }
    throw Error("dependent period set without a sign-partitioned dependency");
  }

  std::vector<LinearComponent> take() { return std::move(out_); }

 private:
  bool split_along_dependency(const NatVector& c, const std::vector<NatVector>& periods,
                              const std::vector<std::size_t>& xs, const std::vector<std::size_t>& ys) {
    std::vector<std::vector<Integer>> columns;
    for (auto i : xs) columns.push_back(as_integers(periods[i]));
    for (auto i : ys) columns.push_back(scaled_column(periods[i], -1));
    const auto basis = minimal_solutions(
        DiophantineSystem(IntegerMatrix::from_columns(columns), std::vector<Integer>(k_, Integer(0))), true);
    if (basis.solutions.empty()) return false;
    const NatVector& a = basis.solutions.front();  // lexicographically least

    for (std::size_t j = 0; j < xs.size(); ++j) {
      const NatVector& xj = periods[xs[j]];
      std::vector<NatVector> rest;
      for (std::size_t i = 0; i < periods.size(); ++i) {
        if (i != xs[j]) rest.push_back(periods[i]);
      }
      const Integer count = sgn(a[j]) > 0 ? a[j] : Integer(1);
      NatVector shifted = c;
      for (Integer lambda = 0; lambda < count; ++lambda) {
        run(shifted, rest);
        shifted = shifted + xj;
      }
    }
    return true;
  }

  std::size_t k_;
  const ResourceLimits& limits_;
  std::set<std::pair<NatVector, std::vector<NatVector>>> seen_;
  std::vector<LinearComponent> out_;
};

}  // namespace

std::vector<NatVector> IndependentBasis::columns() const {
  std::vector<NatVector> all = original_periods;
  all.insert(all.end(), extension.begin(), extension.end());
  return all;
}

bool is_independent(std::span<const NatVector> periods) {
  if (periods.empty()) return true;
  if (periods.size() > periods.front().dimension()) return false;
  return rank_of(periods) == periods.size();
}

IndependentBasis extend_to_basis(std::size_t dimension, std::span<const NatVector> periods) {
  require_dimension(periods, dimension);
  if (!is_independent(periods)) throw InvalidInput("extend_to_basis needs linearly independent periods");
  IndependentBasis basis;
  basis.original_periods.assign(periods.begin(), periods.end());
  std::vector<NatVector> cols = basis.original_periods;
  for (std::size_t i = 0; i < dimension && cols.size() < dimension; ++i) {
    cols.push_back(NatVector::unit(dimension, i));
    if (rank_of(cols) == cols.size()) {
      basis.extension.push_back(cols.back());
      basis.extension_indices.push_back(i);
    } else {
      cols.pop_back();
    }
  }
  std::vector<std::vector<Integer>> columns;
  for (const auto& v : cols) columns.push_back(as_integers(v));
  basis.delta = abs(determinant(IntegerMatrix::from_columns(columns)));
  return basis;
}

SemilinearSet decompose_independent(const NatVector& constant, std::span<const NatVector> periods,
                                    const ResourceLimits& limits) {
  require_dimension(periods, constant.dimension());
  Decomposer d(constant.dimension(), limits);
  d.run(constant, std::vector<NatVector>(periods.begin(), periods.end()));
  return SemilinearSet(constant.dimension(), d.take());
}

SemilinearSet complement_linear_origin(std::size_t k, std::span<const NatVector> periods,
                                       const ResourceLimits& limits) {
  const IndependentBasis basis = extend_to_basis(k, periods);
  const std::vector<NatVector> x = basis.columns();
  const std::size_t p = periods.size();
  const Integer& delta = basis.delta;
  if (!delta.fits_slong_p()) throw ResourceLimitError("complement_linear_origin", "delta", delta.get_str());

  // Columns over the unknowns (y, a) in N^k x N^k: delta * e_i for y, then
  // +x_i for i in K and -x_i otherwise. mu_i = -a_i on K, a_i elsewhere.
  auto sign_system = [&](unsigned mask, std::map<std::size_t, VarConstraint> constraints) {
    std::vector<std::vector<Integer>> columns;
    for (std::size_t i = 0; i < k; ++i) columns.push_back(scaled_column(NatVector::unit(k, i), delta.get_si()));
    for (std::size_t i = 0; i < k; ++i) columns.push_back(scaled_column(x[i], (mask >> i) & 1u ? 1 : -1));
    return DiophantineSystem(IntegerMatrix::from_columns(columns), std::vector<Integer>(k, Integer(0)),
                             std::move(constraints));
  };

  std::vector<LinearComponent> comps;
  auto keep = [&](std::optional<LinearComponent> c) {
    if (!c) return;
    enforce_norm(limits, std::max(norm_of(c->constants()), norm_of(c->periods())), "complement_linear_origin");
    comps.push_back(std::move(*c));
  };

  // Some mu_i < 0: the sign pattern K is exactly {i : mu_i < 0}, a_i > 0 on K.
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::map<std::size_t, VarConstraint> positive;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) positive[k + i] = VarConstraint{1, 1};
    }
    const LinearSolution sol = solve_lcq(sign_system(mask, std::move(positive)));
    keep(project_component(sol.constants, sol.periods, k));
  }

  // All mu_i >= 0 and some extension coefficient positive.
  for (std::size_t i = p; i < k; ++i) {
    const LinearSolution sol = solve_lcq(sign_system(0, {{k + i, VarConstraint{1, 1}}}));
    keep(project_component(sol.constants, sol.periods, k));
  }

  // Extension coefficients zero, mu_i >= 0, some mu_i not divisible by delta:
  // delta * y = sum_{j<p} a_j x_j with a_i = delta * z + r, 0 < r < delta.
  if (delta > 1) {
    for (std::size_t i = 0; i < p; ++i) {
      std::vector<std::vector<Integer>> columns;
      for (std::size_t j = 0; j < k; ++j) columns.push_back(scaled_column(NatVector::unit(k, j), delta.get_si()));
      for (std::size_t j = 0; j < p; ++j) columns.push_back(scaled_column(x[j], -1));
      const IntegerMatrix m = IntegerMatrix::from_columns(columns);
      const std::vector<Integer> zero(k, Integer(0));

      std::vector<NatVector> constants;
      for (long r = 1; r < delta.get_si(); ++r) {
        DiophantineSystem sys(m, zero, {{k + i, VarConstraint{delta, r}}});
        for (auto& v : minimal_solutions(sys, false).solutions) constants.push_back(std::move(v));
      }
      const auto periods_full = minimal_solutions(DiophantineSystem(m, zero, {{k + i, VarConstraint{delta, 0}}}), true);
      keep(project_component(std::move(constants), periods_full.solutions, k));
    }
  }

  SemilinearSet result(k, std::move(comps));
  enforce(limits, result, "complement_linear_origin");
  return result;
}

SemilinearSet complement_linear(const NatVector& x0, std::span<const NatVector> periods,
                                const ResourceLimits& limits) {
  const std::size_t k = x0.dimension();
  require_dimension(periods, k);
  std::vector<LinearComponent> comps;

  // Points y with y_j < (x0)_j for some j.
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(x0[j]) == 0) continue;
    if (!x0[j].fits_ulong_p() || x0[j] > limits.max_components) {
      throw ResourceLimitError("complement_linear", "constants", x0[j].get_str());
    }
    std::vector<NatVector> constants;
    for (Integer v = 0; v < x0[j]; ++v) {
      std::vector<Integer> e(k, Integer(0));
      e[j] = v;
      constants.emplace_back(std::move(e));
    }
    std::vector<NatVector> units;
    for (std::size_t i = 0; i < k; ++i) {
      if (i != j) units.push_back(NatVector::unit(k, i));
    }
    comps.emplace_back(std::move(constants), std::move(units));
  }

  // x0 <= y: shift the complement of L(0, P).
  const SemilinearSet origin = complement_linear_origin(k, periods, limits);
  for (const auto& c : origin.components()) {
    std::vector<NatVector> shifted;
    for (const auto& v : c.constants()) shifted.push_back(v + x0);
    comps.emplace_back(std::move(shifted), std::vector<NatVector>(c.periods().begin(), c.periods().end()));
  }

  SemilinearSet result(k, std::move(comps));
  enforce(limits, result, "complement_linear");
  return result;
}

SemilinearSet complement(const SemilinearSet& set, const ResourceLimits& limits, ComplementTrace* trace) {
  const std::size_t k = set.dimension();
  if (trace) *trace = ComplementTrace{};
  if (trace) trace->input = set;
  if (set.has_no_components()) {
    SemilinearSet all = SemilinearSet::universe(k);
    if (trace) {
      trace->independent = SemilinearSet::empty(k);
      trace->result = all;
    }
    return all;
  }

  const SemilinearSet expanded = expand_constants(set);
  std::vector<SemilinearSet> pieces = parallel_map(expanded.components().size(), [&](std::size_t i) {
    const LinearComponent& c = expanded.components()[i];
    return decompose_independent(c.constants().front(), c.periods(), limits);
  });
  std::vector<LinearComponent> independent_comps;
  for (const auto& piece : pieces) {
    independent_comps.insert(independent_comps.end(), piece.components().begin(), piece.components().end());
  }
  const SemilinearSet independent(k, std::move(independent_comps));
  enforce(limits, independent, "decompose_independent");

  const auto h = independent.components();
  std::vector<SemilinearSet> complements = parallel_map(h.size(), [&](std::size_t i) {
    return complement_linear(h[i].constants().front(), h[i].periods(), limits);
  });

  SemilinearSet result = intersect_many(complements, &limits);
  if (trace) {
    trace->decompositions = std::move(pieces);
    trace->independent = independent;
    trace->origin_complements = parallel_map(h.size(), [&](std::size_t i) {
      return complement_linear_origin(k, h[i].periods(), limits);
    });
    trace->linear_complements = std::move(complements);
    trace->result = result;
  }
  return result;
}

}  // namespace semilinear
