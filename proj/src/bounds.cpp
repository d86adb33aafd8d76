// SPDX-License-Identifier: Apache-2.0
#include "semilinear/bounds.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "semilinear/errors.hpp"
#include "semilinear/interval.hpp"
#include "semilinear/json_io.hpp"

namespace semilinear {

namespace {

constexpr std::array<std::pair<OperationKind, std::string_view>, 9> kKindNames{{
    {OperationKind::Union, "union"},
    {OperationKind::Intersect, "intersect"},
    {OperationKind::IntersectMany, "intersect-many"},
    {OperationKind::Preimage, "preimage"},
    {OperationKind::Decompose, "decompose"},
    {OperationKind::ComplementLinearOrigin, "complement-linear-origin"},
    {OperationKind::ComplementLinear, "complement-linear"},
    {OperationKind::ComplementIndependent, "complement-independent"},
    {OperationKind::Complement, "complement"},
}};

constexpr int kRenderDigits = 24;

// ceil(log2 x) for x >= 1, and 0 for x = 0.
std::size_t ceil_log2(std::size_t x) {
  std::size_t q = 0;
  while ((std::size_t{1} << q) < x) ++q;
  return q;
}

class Evaluator {
 public:
  Evaluator(const BoundQuery& query, int digits) : q_(query), prec_(bits_for_digits(digits)) {
    report_.kind = query.kind;
    report_.query = query;
    report_.precision_digits = digits;
  }

  BoundReport run() {
    switch (q_.kind) {
      case OperationKind::Union: union_bounds(); break;
      case OperationKind::Intersect: intersect_bounds(); break;
      case OperationKind::IntersectMany: intersect_many_bounds(); break;
      case OperationKind::Preimage: preimage_bounds(); break;
      case OperationKind::Decompose: decompose_bounds(); break;
      case OperationKind::ComplementLinearOrigin: origin_bounds(); break;
      case OperationKind::ComplementLinear: linear_bounds(); break;
      case OperationKind::ComplementIndependent: independent_bounds(); break;
      case OperationKind::Complement: complement_bounds(); break;
    }
    BoundStatus overall = BoundStatus::Certified;
    for (const auto& c : report_.checks) {
      if (c.status == BoundStatus::Violated) overall = BoundStatus::Violated;
      if (c.status == BoundStatus::Inconclusive && overall == BoundStatus::Certified) {
        overall = BoundStatus::Inconclusive;
      }
    }
    report_.status = overall;
    return std::move(report_);
  }

 private:
  Interval num(const Integer& v) const { return Interval::exact(v, prec_); }
  Interval num(long v) const { return Interval::exact(v, prec_); }
  Interval num(std::size_t v) const { return Interval::exact(Integer(static_cast<unsigned long>(v)), prec_); }

  // k^{k/2}
  Interval root_power(std::size_t k) const { return pow(num(k), num(k) / num(2L)); }

  void expect_operands(std::size_t count) const {
    if (q_.operands.size() != count) {
      throw InvalidInput(std::string(kind_name(q_.kind)) + " bound needs " + std::to_string(count) +
                         " operand metrics, got " + std::to_string(q_.operands.size()));
    }
  }

  void exact_parameter(std::string name, const Integer& v) { report_.parameters.push_back({std::move(name), v, "", ""}); }
  void interval_parameter(std::string name, const Interval& v) {
    report_.parameters.push_back({std::move(name), std::nullopt, v.lower_string(kRenderDigits), v.upper_string(kRenderDigits)});
  }

  void direct(std::string metric, std::string formula, const Integer& measured, const Interval& bound) {
    BoundStatus s = BoundStatus::Inconclusive;
    if (bound.lower_at_least(measured)) {
      s = BoundStatus::Certified;
    } else if (bound.upper_below(measured)) {
      s = BoundStatus::Violated;
    }
    report_.checks.push_back({std::move(metric), std::move(formula), false, measured,
                              bound.lower_string(kRenderDigits), bound.upper_string(kRenderDigits), s});
  }

  void log_form(std::string metric, std::string formula, const Integer& measured, const Interval& log_bound) {
    BoundStatus s = BoundStatus::Inconclusive;
    if (sgn(measured) == 0) {
      s = BoundStatus::Certified;
    } else {
      const Interval lm = log2(num(measured));
      if (lm.upper_at_most_lower_of(log_bound)) {
        s = BoundStatus::Certified;
      } else if (lm.lower_above_upper_of(log_bound)) {
        s = BoundStatus::Violated;
      }
    }
    report_.checks.push_back({std::move(metric), std::move(formula), true, measured,
                              log_bound.lower_string(kRenderDigits), log_bound.upper_string(kRenderDigits), s});
  }

  // exponent * log2(base), with 0 * log2(0) read as 0 (x^0 = 1).
  Interval log2_power(const Interval& base, const Interval& exponent) const {
    if (exponent.is_point_zero()) return num(0L);
    return exponent * log2(base);
  }

  void union_bounds() {
    expect_operands(2);
    const Metrics& a = q_.operands[0];
    const Metrics& b = q_.operands[1];
    direct("index_size", "|I1| + |I2|", Integer(static_cast<unsigned long>(q_.result.index_size)),
           num(a.index_size) + num(b.index_size));
    direct("max_period_norm", "max(n1, n2)", q_.result.max_period_norm,
           num(std::max(a.max_period_norm, b.max_period_norm)));
    direct("max_const_norm", "max(l1, l2)", q_.result.max_const_norm,
           num(std::max(a.max_const_norm, b.max_const_norm)));
  }

  // m, n, l and p over all operands.
  struct Joint {
    Integer m = 0;
    Integer n = 0;
    Integer l = 0;
    Integer p = 0;
  };
  Joint joint() const {
    Joint j;
    for (const auto& o : q_.operands) {
      j.m = std::max(j.m, Integer(static_cast<unsigned long>(o.max_period_card)));
      j.n = std::max(j.n, o.max_period_norm);
      j.l = std::max(j.l, o.max_const_norm);
      j.p = std::max(j.p, Integer(static_cast<unsigned long>(o.index_size)));
    }
    return j;
  }

  void intersect_bounds() {
    expect_operands(2);
    const std::size_t k = q_.dimension;
    const Joint j = joint();
    const Metrics& r = q_.result;
    const Integer measured_index(static_cast<unsigned long>(r.index_size));
    direct("index_size", "E1 * E2 (expanded constant counts)", measured_index,
           num(q_.operands[0].constant_count) * num(q_.operands[1].constant_count));
    direct("index_size", "p^2 (l+1)^{2k}", measured_index,
           pow(num(j.p), num(2L)) * pow(num(j.l + 1), num(2 * k)));
    const Interval period = num(3L) * pow(num(j.m), num(2L)) * root_power(k) * pow(num(j.n), num(k + 1));
    direct("max_period_norm", "3 m^2 k^{k/2} n^{k+1}", r.max_period_norm, period);
    direct("max_const_norm", "(3 m^2 k^{k/2} n^{k+1} + 1) l", r.max_const_norm, (period + num(1L)) * num(j.l));
  }

  void intersect_many_bounds() {
    if (q_.operands.empty()) throw InvalidInput("intersect-many bound needs at least one operand");
    const std::size_t k = q_.dimension;
    const Joint j = joint();
    const std::size_t q = ceil_log2(q_.operands.size());
    const Interval ak = pow(num(4L), num(k + 1)) * root_power(k);
    exact_parameter("q", Integer(static_cast<unsigned long>(q)));
    exact_parameter("q_cardinality", Integer(static_cast<unsigned long>(q_.operands.size())));
    interval_parameter("a_k", ak);

    const Interval two_q = pow(num(2L), num(q));
    const Interval akn = ak * num(j.n);
    const Interval index = log2_power(num(j.p), two_q) + log2_power(num(j.l + 1), num(k) * num(2L) * two_q) +
                           log2_power(akn + num(1L), num(4L) * pow(num(3 * k + 2), num(q + 1)));
    log_form("index_size", "p^{2^q} (l+1)^{k 2^{q+1}} (a_k n + 1)^{4 (3k+2)^{q+1}}",
             Integer(static_cast<unsigned long>(q_.result.index_size)), index);
    log_form("max_period_norm", "(a_k n)^{(3k+1)^q}", q_.result.max_period_norm,
             log2_power(akn, pow(num(3 * k + 1), num(q))));
    log_form("max_const_norm", "(a_k n + 1)^{(3k+2)^q} l", q_.result.max_const_norm,
             log2_power(akn + num(1L), pow(num(3 * k + 2), num(q))) + log2(num(j.l)));
  }

  void preimage_bounds() {
    expect_operands(1);
    const Metrics& s = q_.operands[0];
    const std::size_t k1 = q_.source_dimension;
    const std::size_t k2 = q_.dimension;
    const std::size_t m = s.max_period_card;
    const Interval qb = num(k1 + m + 1) * pow(num(k2), num(std::min(k1 + m, k2)) / num(2L)) *
                        pow(num(q_.matrix_norm + 1), num(std::min(k1, k2))) *
                        pow(num(s.max_period_norm + 1), num(std::min(m, k2)));
    interval_parameter("solution_norm_bound", qb);
    direct("index_size", "expanded |I|", Integer(static_cast<unsigned long>(q_.result.index_size)),
           num(s.constant_count));
    direct("max_period_norm", "(k1+m+1) k2^{min(k1+m,k2)/2} (||H||+1)^{min(k1,k2)} (n+1)^{min(m,k2)}",
           q_.result.max_period_norm, qb);
    direct("max_const_norm", "(k1+m+1) k2^{min(k1+m,k2)/2} (||H||+1)^{min(k1,k2)} (n+1)^{min(m,k2)} l",
           q_.result.max_const_norm, qb * num(s.max_const_norm));
  }

  void decompose_bounds() {
    expect_operands(1);
    const std::size_t k = q_.dimension;
    const Metrics& s = q_.operands[0];
    const std::size_t m = s.max_period_card;
    Integer fm1;
    Integer fm;
    mpz_fac_ui(fm1.get_mpz_t(), m + 1);
    mpz_fac_ui(fm.get_mpz_t(), m);
    const Interval kn = root_power(k) * pow(num(s.max_period_norm), num(k));
    const Interval index = num(fm1 * fm) / pow(num(2L), num(m)) *
                           pow(kn + num(1L), num(static_cast<long>(m) - 1));
    direct("index_size", "(m+1)! m! / 2^m (k^{k/2} n^k + 1)^{m-1}",
           Integer(static_cast<unsigned long>(q_.result.index_size)), index);
    direct("max_period_norm", "n", q_.result.max_period_norm, num(s.max_period_norm));
    direct("max_const_norm", "||x0|| + (m+1)(m+2)/2 k^{k/2} n^{k+1}", q_.result.max_const_norm,
           num(s.max_const_norm) + num((m + 1) * (m + 2) / 2) * root_power(k) *
                                       pow(num(s.max_period_norm), num(k + 1)));
  }

  void origin_bounds() {
    expect_operands(1);
    const std::size_t k = q_.dimension;
    const Integer n = std::max(q_.operands[0].max_period_norm, Integer(1));
    const Interval norm = num(2 * k + 1) * root_power(k) * pow(num(n), num(k));
    direct("index_size", "2^k + k - 1", Integer(static_cast<unsigned long>(q_.result.index_size)),
           pow(num(2L), num(k)) + num(k) - num(1L));
    direct("max_period_norm", "(2k+1) k^{k/2} max(n,1)^k", q_.result.max_period_norm, norm);
    direct("max_const_norm", "(2k+1) k^{k/2} max(n,1)^k", q_.result.max_const_norm, norm);
  }

  void linear_bounds() {
    expect_operands(1);
    const std::size_t k = q_.dimension;
    const Metrics& s = q_.operands[0];
    const Interval norm = num(2 * k + 1) * root_power(k) * pow(num(s.max_period_norm + 1), num(k));
    direct("index_size", "2^k + 2k - 1", Integer(static_cast<unsigned long>(q_.result.index_size)),
           pow(num(2L), num(k)) + num(2 * k) - num(1L));
    direct("max_period_norm", "(2k+1) k^{k/2} (||P||+1)^k", q_.result.max_period_norm, norm);
    direct("max_const_norm", "(2k+1) k^{k/2} (||P||+1)^k + ||x0||", q_.result.max_const_norm,
           norm + num(s.max_const_norm));
    const Interval card = pow(num(4L), num(k)) * pow(num(k), num(k * k) / num(2L) + num(k)) *
                          pow(num(s.max_period_norm + 1), num(k * k));
    direct("max_const_card", "max(4^k k^{k^2/2+k} (||P||+1)^{k^2}, ||x0||)",
           Integer(static_cast<unsigned long>(q_.result.max_const_card)), max(card, num(s.max_const_norm)));
  }

  void independent_bounds() {
    expect_operands(1);
    const std::size_t k = q_.dimension;
    const Metrics& h = q_.operands[0];
    const std::size_t q = ceil_log2(h.index_size);
    exact_parameter("q", Integer(static_cast<unsigned long>(q)));
    exact_parameter("q_cardinality", Integer(static_cast<unsigned long>(h.index_size)));
    const Interval base = num(4 * k) * num(h.max_period_norm + 1);
    const Interval l1 = num(h.max_const_norm + 1);
    const Interval index = log2_power(base, num(5 * (k + 2)) * pow(num(3 * k + 2), num(q + 1))) +
                           log2_power(l1, num(k) * pow(num(2L), num(q + 1)));
    log_form("index_size", "(4k(n+1))^{5(k+2)(3k+2)^{q+1}} (l+1)^{k 2^{q+1}}",
             Integer(static_cast<unsigned long>(q_.result.index_size)), index);
    log_form("max_period_norm", "(4k(n+1))^{(k+2)(3k+1)^q}", q_.result.max_period_norm,
             log2_power(base, num(k + 2) * pow(num(3 * k + 1), num(q))));
    log_form("max_const_norm", "(4k(n+1))^{(k+2)(3k+2)^q + k} (l+1)", q_.result.max_const_norm,
             log2_power(base, num(k + 2) * pow(num(3 * k + 2), num(q)) + num(k)) + log2(l1));
  }

  void complement_bounds() {
    expect_operands(1);
    const std::size_t k = q_.dimension;
    const Metrics& s = q_.operands[0];
    const std::size_t m = s.max_period_card;
    const Interval root = sqrt(num(k)) * num(s.max_period_norm + 2);
    const Interval lg = log2(num(3 * k + 2));
    const Interval log2e = Interval::log2_e(prec_);
    const Interval card = num(s.constant_count);
    // b = root^{k lg (3m+1) + 3} (3k+2)^{-(2 log2 e + 1) m + 7} |I|^{lg}
    const Interval b = pow(root, num(k) * lg * num(3 * m + 1) + num(3L)) *
                       pow(num(3 * k + 2), num(7L) - (num(2L) * log2e + num(1L)) * num(m)) * pow(card, lg);
    interval_parameter("b", b);
    exact_parameter("index_cardinality", Integer(static_cast<unsigned long>(s.constant_count)));
    const Interval e = Interval::euler(prec_);
    const Interval exponent = pow(root, num(k * (3 * m + 1) + 8)) / pow(num(2L) * e * e, num(m)) * card;
    log_form("index_size", "2^b (l+2)^{(sqrt(k)(n+2))^{k(3m+1)+8} (2e^2)^{-m} |I|}",
             Integer(static_cast<unsigned long>(q_.result.index_size)),
             b + log2_power(num(s.max_const_norm + 2), exponent));
    log_form("max_period_norm", "2^b", q_.result.max_period_norm, b);
    log_form("max_const_norm", "2^b (l+1)", q_.result.max_const_norm, b + log2(num(s.max_const_norm + 1)));
  }

  const BoundQuery& q_;
  mpfr_prec_t prec_;
  BoundReport report_;
};

}  // namespace

std::string_view kind_name(OperationKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

OperationKind parse_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw InvalidInput("unknown operation kind \"" + std::string(name) + "\"");
}

std::string_view status_name(BoundStatus status) {
  switch (status) {
    case BoundStatus::Certified: return "CERTIFIED";
    case BoundStatus::Inconclusive: return "INCONCLUSIVE";
    case BoundStatus::Violated: return "VIOLATED";
  }
  return "INCONCLUSIVE";
}

BoundReport bound_report(const BoundQuery& query, int digits, int max_digits) {
  if (digits < 1) throw InvalidInput("precision must be at least one digit");
  widen_exponent_range();
  BoundReport report = Evaluator(query, digits).run();
  while (report.status == BoundStatus::Inconclusive && digits < max_digits) {
    digits = std::min(digits * 2, max_digits);
    report = Evaluator(query, digits).run();
  }
  return report;
}

BoundQuery make_query(OperationKind kind, std::span<const SemilinearSet> inputs, const SemilinearSet& output,
                      const IntegerMatrix* h) {
  BoundQuery q;
  q.kind = kind;
  q.dimension = output.dimension();
  for (const auto& s : inputs) q.operands.push_back(metrics(s));
  q.result = metrics(output);
  if (kind == OperationKind::Preimage) {
    if (!h) throw InvalidInput("preimage bound needs the homomorphism matrix");
    if (inputs.size() != 1) throw InvalidInput("preimage bound needs exactly one input set");
    q.dimension = inputs.front().dimension();
    q.source_dimension = h->cols();
    q.matrix_norm = h->norm();
  }
  return q;
}

std::vector<BoundQuery> stage_queries(const ComplementTrace& trace) {
  std::vector<BoundQuery> out;
  auto linear = [&](const LinearComponent& c) {
    return SemilinearSet(trace.input.dimension(), {c});
  };
  const SemilinearSet expanded = expand_constants(trace.input);
  for (std::size_t i = 0; i < trace.decompositions.size(); ++i) {
    const SemilinearSet in[] = {linear(expanded.components()[i])};
    out.push_back(make_query(OperationKind::Decompose, in, trace.decompositions[i]));
  }
  const auto h = trace.independent.components();
  for (std::size_t i = 0; i < trace.origin_complements.size(); ++i) {
    const SemilinearSet in[] = {
        linear(LinearComponent({NatVector::zero(trace.input.dimension())},
                               std::vector<NatVector>(h[i].periods().begin(), h[i].periods().end())))};
    out.push_back(make_query(OperationKind::ComplementLinearOrigin, in, trace.origin_complements[i]));
  }
  for (std::size_t i = 0; i < trace.linear_complements.size(); ++i) {
    const SemilinearSet in[] = {linear(h[i])};
    out.push_back(make_query(OperationKind::ComplementLinear, in, trace.linear_complements[i]));
  }
  if (!trace.linear_complements.empty()) {
    out.push_back(make_query(OperationKind::IntersectMany, trace.linear_complements, trace.result));
    const SemilinearSet in[] = {trace.independent};
    out.push_back(make_query(OperationKind::ComplementIndependent, in, trace.result));
  }
  const SemilinearSet in[] = {trace.input};
  out.push_back(make_query(OperationKind::Complement, in, trace.result));
  return out;
}

nlohmann::json to_json(const BoundReport& report) {
  using json_io::integer;
  nlohmann::json out;
  out["kind"] = std::string(kind_name(report.kind));
  out["status"] = std::string(status_name(report.status));
  out["precision_digits"] = report.precision_digits;
  out["dimension"] = report.query.dimension;
  if (report.kind == OperationKind::Preimage) {
    out["source_dimension"] = report.query.source_dimension;
    out["matrix_norm"] = integer(report.query.matrix_norm);
  }
  nlohmann::json operands = nlohmann::json::array();
  for (const auto& m : report.query.operands) operands.push_back(json_io::to_json(m));
  out["operands"] = std::move(operands);
  out["result"] = json_io::to_json(report.query.result);
  nlohmann::json params = nlohmann::json::object();
  for (const auto& p : report.parameters) {
    if (p.value) {
      params[p.name] = integer(*p.value);
    } else {
      params[p.name] = {{"lower", p.lower}, {"upper", p.upper}};
    }
  }
  out["parameters"] = std::move(params);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"metric", c.metric},
                      {"formula", c.formula},
                      {"form", c.log2_form ? "log2" : "direct"},
                      {"measured", integer(c.measured)},
                      {"bound_lower", c.bound_lower},
                      {"bound_upper", c.bound_upper},
                      {"status", std::string(status_name(c.status))}});
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace semilinear
