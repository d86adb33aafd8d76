// SPDX-License-Identifier: Apache-2.0
#include "semilinear/diophantine.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

#include "semilinear/errors.hpp"

namespace semilinear {

DiophantineSystem::DiophantineSystem(IntegerMatrix a, std::vector<Integer> b,
                                     std::map<std::size_t, VarConstraint> constraints)
    : matrix(std::move(a)), rhs(std::move(b)), var_constraints(std::move(constraints)) {
  if (matrix.rows() == 0 || matrix.cols() == 0) throw InvalidInput("system needs s >= 1 and t >= 1");
  if (rhs.size() != matrix.rows()) {
    throw DimensionError("right-hand side has length " + std::to_string(rhs.size()) + ", expected " +
                         std::to_string(matrix.rows()));
  }
  for (const auto& [var, c] : var_constraints) {
    if (var >= matrix.cols()) throw InvalidInput("constraint on unknown variable " + std::to_string(var));
    if (c.scale < 1) throw InvalidInput("constraint scale must be >= 1");
    if (sgn(c.offset) < 0) throw InvalidInput("constraint offset must be >= 0");
  }
}

DiophantineSystem DiophantineSystem::substituted() const {
  IntegerMatrix a = matrix;
  std::vector<Integer> b = rhs;
  for (const auto& [var, c] : var_constraints) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      b[r] -= a.at(r, var) * c.offset;
      a.at(r, var) *= c.scale;
    }
  }
  return DiophantineSystem(std::move(a), std::move(b));
}

NatVector DiophantineSystem::to_original(const NatVector& z, bool with_offsets) const {
  std::vector<Integer> x(z.entries().begin(), z.entries().end());
  for (const auto& [var, c] : var_constraints) {
    x[var] = x[var] * c.scale + (with_offsets ? c.offset : Integer(0));
  }
  return NatVector(std::move(x));
}

DiophantineSystem DiophantineSystem::homogeneous() const {
  std::map<std::size_t, VarConstraint> scales;
  for (const auto& [var, c] : var_constraints) scales[var] = VarConstraint{c.scale, 0};
  return DiophantineSystem(matrix, std::vector<Integer>(rhs.size(), Integer(0)), std::move(scales));
}

namespace {

// Calls f(indices) for every increasing r-subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(std::as_const(idx));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Integer ceil_sqrt(const Integer& x) {
  Integer s = sqrt(x);
  if (s * s < x) s += 1;
  return s;
}

// (A|b) as a list of columns.
std::vector<std::vector<Integer>> extended_columns(const DiophantineSystem& sys) {
  std::vector<std::vector<Integer>> cols;
  for (std::size_t c = 0; c < sys.unknowns(); ++c) cols.push_back(sys.matrix.column(c));
  cols.push_back(sys.rhs);
  return cols;
}

// Contejean-Devie completion for the minimal solutions of A z = b in N^t.
// Candidates are expanded breadth-first by total degree; z + e_j is only
// generated when <A z - b, A e_j> < 0, and is dropped when it dominates a
// known solution or leaves the box [0, bound]^t. Int is std::int64_t (fast
// path, throws Overflow) or Integer.
template <class Int>
struct Wide {
  using type = Int;
};
template <>
struct Wide<std::int64_t> {
  using type = __int128;
};

struct Overflow {};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Integer checked_add(const Integer& a, const Integer& b) { return a + b; }

template <class Int>
class Completion {
 public:
  Completion(std::size_t s, std::size_t t, std::vector<Int> columns, std::vector<Int> rhs, Int bound)
      : s_(s), t_(t), columns_(std::move(columns)), rhs_(std::move(rhs)), bound_(std::move(bound)) {}

  // Minimal solutions; `homogeneous_basis` requests the minimal nonzero
  // solutions of A z = 0 (rhs ignored). Nodes dominating a vector of
  // `blockers` are pruned.
  std::vector<std::vector<Int>> run(bool homogeneous_basis, const std::vector<std::vector<Int>>& blockers = {}) {
    struct Node {
      std::vector<Int> z;
      std::vector<Int> residual;
    };
    std::vector<Node> level;
    if (homogeneous_basis) {
      for (std::size_t j = 0; j < t_; ++j) {
        if (bound_ < Int(1)) break;
        Node n{std::vector<Int>(t_, Int(0)), std::vector<Int>(columns_.begin() + j * s_,
                                                               columns_.begin() + (j + 1) * s_)};
        n.z[j] = 1;
        level.push_back(std::move(n));
      }
    } else {
      Node n{std::vector<Int>(t_, Int(0)), std::vector<Int>(s_)};
      for (std::size_t i = 0; i < s_; ++i) n.residual[i] = -rhs_[i];
      level.push_back(std::move(n));
    }

    std::vector<std::vector<Int>> solutions;
    while (!level.empty()) {
      std::vector<const Node*> pending;
      for (const auto& n : level) {
        bool zero = std::all_of(n.residual.begin(), n.residual.end(), [](const Int& v) { return v == 0; });
        if (zero) {
          solutions.push_back(n.z);
        } else {
          pending.push_back(&n);
        }
      }
      std::vector<Node> next;
      for (const Node* n : pending) {
        for (std::size_t j = 0; j < t_; ++j) {
          typename Wide<Int>::type dot = 0;
          for (std::size_t i = 0; i < s_; ++i) {
            dot += typename Wide<Int>::type(n->residual[i]) * typename Wide<Int>::type(columns_[j * s_ + i]);
          }
          if (!(dot < 0)) continue;
          if (!(n->z[j] < bound_)) {
            hit_bound_ = true;
            continue;
          }
          Node c{n->z, n->residual};
          c.z[j] = c.z[j] + Int(1);
          if (dominates_solution(c.z, solutions) || dominates_solution(c.z, blockers)) continue;
          for (std::size_t i = 0; i < s_; ++i) c.residual[i] = checked_add(c.residual[i], columns_[j * s_ + i]);
          next.push_back(std::move(c));
        }
      }
      std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.z < b.z; });
      next.erase(std::unique(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.z == b.z; }),
                 next.end());
      level = std::move(next);
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
  }

  bool hit_bound() const noexcept { return hit_bound_; }

 private:
  static bool dominates_solution(const std::vector<Int>& z, const std::vector<std::vector<Int>>& sols) {
    for (const auto& s : sols) {
      bool ge = true;
      for (std::size_t j = 0; j < z.size() && ge; ++j) ge = !(z[j] < s[j]);
      if (ge) return true;
    }
    return false;
  }

  std::size_t s_;
  std::size_t t_;
  std::vector<Int> columns_;  // column-major
  std::vector<Int> rhs_;
  Int bound_;
  bool hit_bound_ = false;
};

std::optional<std::int64_t> narrow(const Integer& v, std::int64_t limit) {
  if (v > limit || v < -limit) return std::nullopt;
  return v.get_si();
}

std::vector<NatVector> complete(const DiophantineSystem& z_sys, const Integer& bound, bool homogeneous_basis) {
  const std::size_t s = z_sys.equations();
  const std::size_t t = z_sys.unknowns();

  // Fast path: 64-bit search state, 128-bit inner products.
  constexpr std::int64_t kEntryLimit = std::int64_t(1) << 40;
  std::vector<std::int64_t> cols64;
  std::vector<std::int64_t> rhs64;
  bool fits = true;
  for (std::size_t c = 0; c < t && fits; ++c) {
    for (std::size_t r = 0; r < s && fits; ++r) {
      auto v = narrow(z_sys.matrix.at(r, c), kEntryLimit);
      if (v) cols64.push_back(*v); else fits = false;
    }
  }
  for (std::size_t r = 0; r < s && fits; ++r) {
    auto v = narrow(z_sys.rhs[r], kEntryLimit);
    if (v) rhs64.push_back(*v); else fits = false;
  }

  std::vector<NatVector> out;
  if (fits) {
    std::int64_t bound64 = bound > kEntryLimit ? kEntryLimit : bound.get_si();
    try {
      Completion<std::int64_t> solver(s, t, std::move(cols64), std::move(rhs64), bound64);
      std::vector<std::vector<std::int64_t>> kernel;
      if (!homogeneous_basis) kernel = solver.run(true);
      for (const auto& z : solver.run(homogeneous_basis, kernel)) {
        std::vector<Integer> e(z.begin(), z.end());
        out.emplace_back(std::move(e));
      }
      // Pruning at a clipped bound could hide solutions.
      if (bound <= kEntryLimit || !solver.hit_bound()) return out;
      out.clear();
    } catch (const Overflow&) {
      out.clear();
    }
  }

  std::vector<Integer> cols;
  for (std::size_t c = 0; c < t; ++c) {
    for (std::size_t r = 0; r < s; ++r) cols.push_back(z_sys.matrix.at(r, c));
  }
  Completion<Integer> solver(s, t, std::move(cols), z_sys.rhs, bound);
  std::vector<std::vector<Integer>> kernel;
  if (!homogeneous_basis) kernel = solver.run(true);
  for (auto& z : solver.run(homogeneous_basis, kernel)) out.emplace_back(std::move(z));
  return out;
}

}  // namespace

Integer hadamard_bound(const DiophantineSystem& sys) {
  const DiophantineSystem z = sys.substituted();
  const std::size_t r = rank(z.matrix);
  if (r == 0) return 1;
  std::vector<Integer> maxima;
  for (const auto& col : extended_columns(z)) {
    Integer m = 0;
    for (const auto& e : col) {
      Integer a = abs(e);
      if (a > m) m = a;
    }
    maxima.push_back(m);
  }
  std::sort(maxima.begin(), maxima.end(), [](const Integer& a, const Integer& b) { return a > b; });
  Integer product = 1;
  for (std::size_t i = 0; i < r; ++i) product *= maxima[i];
  Integer rr;
  mpz_ui_pow_ui(rr.get_mpz_t(), r, r);
  Integer bound = ceil_sqrt(rr * product * product);
  return bound < 1 ? Integer(1) : bound;
}

Integer subdeterminant_bound(const DiophantineSystem& sys) {
  const DiophantineSystem z = sys.substituted();
  const std::size_t r = rank(z.matrix);
  if (r == 0) return 1;
  const auto cols = extended_columns(z);
  Integer best = 0;
  for_each_subset(z.equations(), r, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(cols.size(), r, [&](const std::vector<std::size_t>& cs) {
      IntegerMatrix sub(r, r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) sub.at(i, j) = cols[cs[j]][rows[i]];
      }
      Integer d = abs(determinant(sub));
      if (d > best) best = d;
    });
  });
  return best < 1 ? Integer(1) : best;
}

Integer determinant_bound(const DiophantineSystem& sys) {
  return sys.unknowns() <= 6 ? subdeterminant_bound(sys) : hadamard_bound(sys);
}

Integer minimal_norm_bound(const DiophantineSystem& sys) {
  return Integer(static_cast<unsigned long>(sys.unknowns() + 1)) * determinant_bound(sys);
}

bool integer_solvable(const DiophantineSystem& sys) {
  const DiophantineSystem z = sys.substituted();
  const std::size_t s = z.equations();
  const std::size_t t = z.unknowns();
  // Unimodular column operations bring A to column echelon form L = A U;
  // then A x = b has an integer solution iff L y = b does.
  IntegerMatrix l = z.matrix;
  auto combine = [&](std::size_t c1, std::size_t c2, const Integer& a, const Integer& b, const Integer& c,
                     const Integer& d) {
    for (std::size_t r = 0; r < s; ++r) {
      const Integer u = l.at(r, c1);
      const Integer v = l.at(r, c2);
      l.at(r, c1) = a * u + b * v;
      l.at(r, c2) = c * u + d * v;
    }
  };
  std::vector<std::optional<std::size_t>> pivot(s);
  std::size_t next = 0;
  for (std::size_t r = 0; r < s && next < t; ++r) {
    for (std::size_t c = next + 1; c < t; ++c) {
      if (sgn(l.at(r, c)) == 0) continue;
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), l.at(r, next).get_mpz_t(), l.at(r, c).get_mpz_t());
      const Integer p = l.at(r, next) / g;
      const Integer q = l.at(r, c) / g;
      // [x y; -q p] has determinant x p + y q = 1.
      combine(next, c, x, y, -q, p);
    }
    if (sgn(l.at(r, next)) != 0) pivot[r] = next++;
  }
  std::vector<Integer> y(t, Integer(0));
  for (std::size_t r = 0; r < s; ++r) {
    Integer rest = z.rhs[r];
    for (std::size_t c = 0; c < t; ++c) {
      if (!pivot[r] || c != *pivot[r]) rest -= l.at(r, c) * y[c];
    }
    if (pivot[r]) {
      if (!mpz_divisible_p(rest.get_mpz_t(), l.at(r, *pivot[r]).get_mpz_t())) return false;
      y[*pivot[r]] = rest / l.at(r, *pivot[r]);
    } else if (sgn(rest) != 0) {
      return false;
    }
  }
  return true;
}

MinimalSolutionSet minimal_solutions(const DiophantineSystem& sys, bool exclude_zero) {
  const DiophantineSystem z = sys.substituted();
  MinimalSolutionSet result;
  result.norm_bound_used = minimal_norm_bound(sys);
  const bool zero_rhs = std::all_of(z.rhs.begin(), z.rhs.end(), [](const Integer& v) { return sgn(v) == 0; });
  std::vector<NatVector> zs;
  if (zero_rhs && !exclude_zero) {
    zs.push_back(NatVector::zero(z.unknowns()));
  } else if (!zero_rhs && !integer_solvable(z)) {
    // No integer solution, so none over N either.
  } else {
    zs = complete(z, result.norm_bound_used, zero_rhs);
  }
  for (const auto& v : zs) result.solutions.push_back(sys.to_original(v));
  canonicalize(result.solutions);
  return result;
}

LinearSolution solve_lcq(const DiophantineSystem& sys) {
  LinearSolution out;
  out.constants = minimal_solutions(sys, false).solutions;
  if (out.constants.empty()) return out;
  out.periods = minimal_solutions(sys.homogeneous(), true).solutions;
  return out;
}

}  // namespace semilinear
