// SPDX-License-Identifier: Apache-2.0
#include "semilinear/semilinear_set.hpp"

#include <algorithm>

#include "semilinear/errors.hpp"

namespace semilinear {

namespace {

std::strong_ordering compare_sequences(std::span<const NatVector> a, std::span<const NatVector> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

void require_dimension(std::span<const NatVector> vectors, std::size_t k, const char* what) {
  for (const auto& v : vectors) {
    if (v.dimension() != k) {
      throw DimensionError(std::string(what) + " " + v.to_string() + " has dimension " +
                           std::to_string(v.dimension()) + ", expected " + std::to_string(k));
    }
  }
}

// Depth-first search for coefficients lambda with r = sum lambda_i x_i.
// Periods are visited by decreasing norm; a branch is cut as soon as some
// positive residual coordinate is not covered by any remaining period.
class CoefficientSearch {
 public:
  explicit CoefficientSearch(std::span<const NatVector> periods) {
    order_.reserve(periods.size());
    for (const auto& p : periods) order_.push_back(&p);
    std::stable_sort(order_.begin(), order_.end(),
                     [](const NatVector* a, const NatVector* b) { return a->norm() > b->norm(); });
    const std::size_t k = periods.empty() ? 0 : periods.front().dimension();
    support_.assign(order_.size() + 1, std::vector<bool>(k, false));
    for (std::size_t i = order_.size(); i-- > 0;) {
      support_[i] = support_[i + 1];
      for (std::size_t j = 0; j < k; ++j) {
        if (sgn((*order_[i])[j]) > 0) support_[i][j] = true;
      }
    }
  }

  bool solve(std::vector<Integer>& residual) { return descend(residual, 0); }

 private:
  bool descend(std::vector<Integer>& r, std::size_t i) {
    const std::size_t k = r.size();
    if (i == order_.size()) {
      return std::all_of(r.begin(), r.end(), [](const Integer& e) { return sgn(e) == 0; });
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(r[j]) > 0 && !support_[i][j]) return false;
    }
    const NatVector& x = *order_[i];
    Integer max_lambda;
    bool first = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(x[j]) == 0) continue;
      Integer q = r[j] / x[j];
      if (first || q < max_lambda) max_lambda = q;
      first = false;
    }
    if (i + 1 == order_.size()) {
      // Last period: the residual has to be an exact multiple.
      for (std::size_t j = 0; j < k; ++j) {
        if (r[j] != max_lambda * x[j]) return false;
      }
      return true;
    }
    for (std::size_t j = 0; j < k; ++j) r[j] -= max_lambda * x[j];
    bool found = false;
    for (Integer lambda = max_lambda;; --lambda) {
      if (descend(r, i + 1)) {
        found = true;
      }
      if (found || lambda == 0) {
        for (std::size_t j = 0; j < k; ++j) r[j] += lambda * x[j];
        break;
      }
      for (std::size_t j = 0; j < k; ++j) r[j] += x[j];
    }
    return found;
  }

  std::vector<const NatVector*> order_;
  std::vector<std::vector<bool>> support_;
};

}  // namespace

LinearComponent::LinearComponent(std::vector<NatVector> constants, std::vector<NatVector> periods)
    : constants_(std::move(constants)), periods_(std::move(periods)) {
  if (constants_.empty()) throw InvalidInput("linear component needs at least one constant");
  const std::size_t k = constants_.front().dimension();
  require_dimension(constants_, k, "constant");
  require_dimension(periods_, k, "period");
  std::erase_if(periods_, [](const NatVector& v) { return v.is_zero(); });
  canonicalize(constants_);
  canonicalize(periods_);
}

std::strong_ordering operator<=>(const LinearComponent& a, const LinearComponent& b) {
  if (auto c = compare_sequences(a.constants_, b.constants_); c != 0) return c;
  return compare_sequences(a.periods_, b.periods_);
}

SemilinearSet::SemilinearSet(std::size_t dimension, std::vector<LinearComponent> components)
    : dimension_(dimension), components_(std::move(components)) {
  if (dimension_ == 0) throw InvalidInput("dimension must be positive");
  for (const auto& c : components_) {
    if (c.dimension() != dimension_) {
      throw DimensionError("component of dimension " + std::to_string(c.dimension()) +
                           " in a set of dimension " + std::to_string(dimension_));
    }
  }
  std::sort(components_.begin(), components_.end());
  components_.erase(std::unique(components_.begin(), components_.end()), components_.end());
}

SemilinearSet SemilinearSet::empty(std::size_t dimension) { return SemilinearSet(dimension, {}); }

SemilinearSet SemilinearSet::universe(std::size_t dimension) {
  std::vector<NatVector> units;
  for (std::size_t i = 0; i < dimension; ++i) units.push_back(NatVector::unit(dimension, i));
  return SemilinearSet(dimension, {LinearComponent({NatVector::zero(dimension)}, std::move(units))});
}

std::strong_ordering operator<=>(const SemilinearSet& a, const SemilinearSet& b) {
  if (auto c = a.dimension_ <=> b.dimension_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.components_.begin(), a.components_.end(),
                                                b.components_.begin(), b.components_.end());
}

Metrics metrics(const SemilinearSet& set) {
  Metrics m;
  m.index_size = set.components().size();
  for (const auto& c : set.components()) {
    m.max_period_card = std::max(m.max_period_card, c.periods().size());
    m.max_const_card = std::max(m.max_const_card, c.constants().size());
    m.constant_count += c.constants().size();
    Integer pn = norm_of(c.periods());
    Integer cn = norm_of(c.constants());
    if (pn > m.max_period_norm) m.max_period_norm = pn;
    if (cn > m.max_const_norm) m.max_const_norm = cn;
  }
  m.nu = m.max_period_norm > m.max_const_norm ? m.max_period_norm : m.max_const_norm;
  return m;
}

SemilinearSet normalize(const SemilinearSet& set) {
  std::vector<LinearComponent> comps(set.components().begin(), set.components().end());
  return SemilinearSet(set.dimension(), std::move(comps));
}

SemilinearSet expand_constants(const SemilinearSet& set) {
  std::vector<LinearComponent> out;
  out.reserve(metrics(set).constant_count);
  for (const auto& comp : set.components()) {
    std::vector<NatVector> periods(comp.periods().begin(), comp.periods().end());
    for (const auto& c : comp.constants()) out.emplace_back(std::vector<NatVector>{c}, periods);
  }
  return SemilinearSet(set.dimension(), std::move(out));
}

bool member(const NatVector& point, const LinearComponent& component) {
  if (point.dimension() != component.dimension()) {
    throw DimensionError("point " + point.to_string() + " tested against a component of dimension " +
                         std::to_string(component.dimension()));
  }
  CoefficientSearch search(component.periods());
  for (const auto& c : component.constants()) {
    if (!c.dominated_by(point)) continue;
    std::vector<Integer> residual(point.dimension());
    for (std::size_t j = 0; j < point.dimension(); ++j) residual[j] = point[j] - c[j];
    if (search.solve(residual)) return true;
  }
  return false;
}

bool member(const NatVector& point, const SemilinearSet& set) {
  if (point.dimension() != set.dimension()) {
    throw DimensionError("point " + point.to_string() + " tested against a set of dimension " +
                         std::to_string(set.dimension()));
  }
  return std::any_of(set.components().begin(), set.components().end(),
                     [&](const LinearComponent& c) { return member(point, c); });
}

}  // namespace semilinear
