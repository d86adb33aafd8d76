// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "semilinear/bounds.hpp"
#include "semilinear/complement.hpp"
#include "semilinear/errors.hpp"
#include "semilinear/json_io.hpp"
#include "semilinear/oracle.hpp"
#include "semilinear/ops.hpp"
#include "semilinear/parallel.hpp"
#include "semilinear/random_instances.hpp"

namespace semilinear::cli {

namespace {

using json_io::Json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kResource = 2;
constexpr int kViolated = 3;

struct Options {
  bool compact = false;
  unsigned threads = 1;
  std::string transcript;
  bool report = false;
  std::uint64_t box = 10;
  std::string point;
  std::size_t max_components = ResourceLimits{}.max_components;
  std::size_t max_norm_bits = ResourceLimits{}.max_norm_bits;
  int precision = 32;
  std::uint64_t seed = 1;
  std::string random_kind = "set";
  std::size_t dimension = 1;
  std::vector<std::string> inputs;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  std::string read_text(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw InvalidInput("standard input can only be read once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  Json read_json(const std::string& path) { return json_io::parse(read_text(path)); }
  SemilinearSet read_set(const std::string& path) { return json_io::read_set(read_json(path)); }

  void emit(const Json& value) { out_ << json_io::dump(value, opt_.compact ? -1 : 2) << '\n'; }

  // Result block shared by the set operations, with optional transcript and
  // bound report. Returns the exit code.
  int emit_operation(OperationKind kind, std::span<const SemilinearSet> inputs, const SemilinearSet& output,
                     const IntegerMatrix* h = nullptr) {
    Json body;
    body["result"] = json_io::to_json(output);
    body["metrics"] = json_io::to_json(metrics(output));
    int code = kOk;
    if (opt_.report) {
      const BoundReport report = bound_report(make_query(kind, inputs, output, h), opt_.precision);
      body["report"] = to_json(report);
      if (report.status == BoundStatus::Violated) code = kViolated;
    }
    if (!opt_.transcript.empty()) {
      Json t;
      t["op"] = std::string(kind_name(kind));
      Json ins = Json::array();
      for (const auto& s : inputs) ins.push_back(json_io::to_json(s));
      t["inputs"] = std::move(ins);
      t["output"] = json_io::to_json(output);
      if (h) t["H"] = json_io::to_json(*h);
      std::ofstream f(opt_.transcript, std::ios::binary);
      if (!f) throw InvalidInput("cannot write " + opt_.transcript);
      f << json_io::dump(t, 2) << '\n';
    }
    emit(body);
    return code;
  }

  const Options& opt() const { return opt_; }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

void need_inputs(const Options& opt, std::size_t count, const char* what) {
  if (opt.inputs.size() != count) {
    throw InvalidInput(std::string(what) + " expects " + std::to_string(count) + " input(s), got " +
                       std::to_string(opt.inputs.size()));
  }
}

int cmd_parse(Session& s) {
  need_inputs(s.opt(), 1, "parse");
  const SemilinearSet set = s.read_set(s.opt().inputs[0]);
  s.emit({{"result", json_io::to_json(set)}, {"metrics", json_io::to_json(metrics(set))}});
  return kOk;
}

int cmd_member(Session& s) {
  need_inputs(s.opt(), 1, "member");
  if (s.opt().point.empty()) throw InvalidInput("member needs --point");
  const SemilinearSet set = s.read_set(s.opt().inputs[0]);
  const NatVector y = json_io::read_vector(json_io::parse(s.opt().point), set.dimension());
  s.emit(Json(member(y, set)));
  return kOk;
}

int cmd_binary(Session& s, OperationKind kind) {
  need_inputs(s.opt(), 2, std::string(kind_name(kind)).c_str());
  const std::vector<SemilinearSet> in{s.read_set(s.opt().inputs[0]), s.read_set(s.opt().inputs[1])};
  const SemilinearSet out = kind == OperationKind::Union ? union_of(in[0], in[1]) : intersect(in[0], in[1]);
  return s.emit_operation(kind, in, out);
}

int cmd_intersect_many(Session& s) {
  if (s.opt().inputs.empty()) throw InvalidInput("intersect-many expects at least one input");
  std::vector<SemilinearSet> in;
  for (const auto& p : s.opt().inputs) in.push_back(s.read_set(p));
  return s.emit_operation(OperationKind::IntersectMany, in, intersect_many(in));
}

int cmd_complement(Session& s) {
  need_inputs(s.opt(), 1, "complement");
  const std::vector<SemilinearSet> in{s.read_set(s.opt().inputs[0])};
  ResourceLimits limits;
  limits.max_components = s.opt().max_components;
  limits.max_norm_bits = s.opt().max_norm_bits;
  if (limits.max_components == 0 || limits.max_norm_bits == 0) throw InvalidInput("resource limits must be positive");
  return s.emit_operation(OperationKind::Complement, in, complement(in[0], limits));
}

int cmd_preimage(Session& s) {
  need_inputs(s.opt(), 2, "preimage");
  const Json hj = s.read_json(s.opt().inputs[0]);
  if (!hj.is_object() || !hj.contains("H")) throw InvalidInput("matrix file must be an object with field \"H\"");
  const IntegerMatrix h = json_io::read_matrix(hj["H"]);
  const std::vector<SemilinearSet> in{s.read_set(s.opt().inputs[1])};
  return s.emit_operation(OperationKind::Preimage, in, preimage(h, in[0]), &h);
}

int cmd_hilbert(Session& s) {
  need_inputs(s.opt(), 1, "hilbert");
  const DiophantineSystem sys = json_io::read_system(s.read_json(s.opt().inputs[0]));
  const MinimalSolutionSet inhom = minimal_solutions(sys, false);
  const MinimalSolutionSet hom = minimal_solutions(sys.homogeneous(), true);
  s.emit({{"minimal_solutions", json_io::to_json(inhom.solutions)},
          {"hilbert_basis", json_io::to_json(hom.solutions)},
          {"norm_bound_used", json_io::integer(inhom.norm_bound_used)}});
  return kOk;
}

int cmd_enumerate(Session& s) {
  need_inputs(s.opt(), 1, "enumerate");
  const SemilinearSet set = s.read_set(s.opt().inputs[0]);
  s.emit(json_io::to_json(enumerate_box(set, s.opt().box)));
  return kOk;
}

int cmd_eq(Session& s) {
  need_inputs(s.opt(), 2, "eq");
  const SemilinearSet a = s.read_set(s.opt().inputs[0]);
  const SemilinearSet b = s.read_set(s.opt().inputs[1]);
  const BoxComparison cmp = equal_on_box(a, b, s.opt().box);
  s.emit({{"equal", cmp.equal}, {"witness", cmp.witness ? json_io::to_json(*cmp.witness) : Json(nullptr)}});
  return kOk;
}

int cmd_certify(Session& s) {
  need_inputs(s.opt(), 1, "certify");
  const Json t = s.read_json(s.opt().inputs[0]);
  if (!t.is_object() || !t.contains("op") || !t["op"].is_string()) {
    throw InvalidInput("transcript needs a string field \"op\"");
  }
  if (!t.contains("inputs") || !t["inputs"].is_array()) throw InvalidInput("transcript needs an array \"inputs\"");
  if (!t.contains("output")) throw InvalidInput("transcript needs an \"output\" set");
  const OperationKind kind = parse_kind(t["op"].get<std::string>());
  std::vector<SemilinearSet> inputs;
  for (const auto& j : t["inputs"]) inputs.push_back(json_io::read_set(j));
  const SemilinearSet output = json_io::read_set(t["output"]);
  std::optional<IntegerMatrix> h;
  if (t.contains("H")) h = json_io::read_matrix(t["H"]);
  const BoundReport report =
      bound_report(make_query(kind, inputs, output, h ? &*h : nullptr), s.opt().precision);
  s.emit(to_json(report));
  return report.status == BoundStatus::Violated ? kViolated : kOk;
}

int cmd_random(Session& s) {
  Rng rng(s.opt().seed);
  if (s.opt().dimension == 0) throw InvalidInput("--dimension must be positive");
  if (s.opt().random_kind == "set") {
    s.emit(json_io::to_json(random_set(rng, s.opt().dimension, SetShape{})));
  } else if (s.opt().random_kind == "system") {
    const DiophantineSystem sys = random_system(rng, 3, 3, 3);
    Json b = Json::array();
    for (const auto& v : sys.rhs) b.push_back(json_io::integer(v));
    s.emit({{"A", json_io::to_json(sys.matrix)}, {"b", std::move(b)}});
  } else if (s.opt().random_kind == "matrix") {
    s.emit({{"H", json_io::to_json(random_matrix(rng, s.opt().dimension, s.opt().dimension, 0, 2))}});
  } else {
    throw InvalidInput("--kind must be set, system or matrix");
  }
  return kOk;
}

void report_error(std::ostream& err, const char* code, const std::string& message, Json extra = Json::object()) {
  Json e = std::move(extra);
  e["error"] = code;
  e["message"] = message;
  err << json_io::dump(e) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact operations on semilinear subsets of N^k", "semilin"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.compact, "Compact single-line JSON output");
  app.add_option("--threads", opt.threads, "Worker threads for set operations")->check(CLI::PositiveNumber);

  auto op_flags = [&](CLI::App* sub) {
    sub->add_option("--transcript", opt.transcript, "Write an operation transcript for `certify`");
    sub->add_flag("--report", opt.report, "Attach a bound report");
    sub->add_option("--precision", opt.precision, "Decimal digits for the bound report")->check(CLI::PositiveNumber);
  };
  auto inputs = [&](CLI::App* sub, const char* what) {
    sub->add_option("inputs", opt.inputs, what)->required();
  };

  auto* parse = app.add_subcommand("parse", "Validate and normalize a set");
  inputs(parse, "Set file or - for stdin");
  auto* mem = app.add_subcommand("member", "Exact membership test");
  mem->add_option("--point", opt.point, "Point as a JSON array")->required();
  inputs(mem, "Set file");
  auto* uni = app.add_subcommand("union", "Union of two sets");
  inputs(uni, "Two set files");
  op_flags(uni);
  auto* inter = app.add_subcommand("intersect", "Intersection of two sets");
  inputs(inter, "Two set files");
  op_flags(inter);
  auto* many = app.add_subcommand("intersect-many", "Intersection of one or more sets");
  inputs(many, "Set files");
  op_flags(many);
  auto* comp = app.add_subcommand("complement", "Complement with respect to N^k");
  inputs(comp, "Set file");
  op_flags(comp);
  comp->add_option("--max-components", opt.max_components, "Cap on the output index size");
  comp->add_option("--max-norm-bits", opt.max_norm_bits, "Cap on the bit length of any entry");
  auto* pre = app.add_subcommand("preimage", "Inverse image under x -> Hx");
  inputs(pre, "Matrix file {\"H\": ...} and set file");
  op_flags(pre);
  auto* hil = app.add_subcommand("hilbert", "Minimal solutions of A x = b over N");
  inputs(hil, "System file {\"A\": ..., \"b\": ...}");
  auto* enu = app.add_subcommand("enumerate", "Points of a set inside [0,B]^k");
  enu->add_option("--box", opt.box, "Box bound B");
  inputs(enu, "Set file");
  auto* eq = app.add_subcommand("eq", "Compare two sets on [0,B]^k");
  eq->add_option("--box", opt.box, "Box bound B");
  inputs(eq, "Two set files");
  auto* cert = app.add_subcommand("certify", "Bound report for an operation transcript");
  cert->add_option("--precision", opt.precision, "Initial decimal digits")->check(CLI::PositiveNumber);
  inputs(cert, "Transcript file");
  auto* rnd = app.add_subcommand("random", "Emit a seeded random instance");
  rnd->add_option("--seed", opt.seed, "Generator seed");
  rnd->add_option("--kind", opt.random_kind, "set, system or matrix");
  rnd->add_option("--dimension", opt.dimension, "Dimension of sets and matrices");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kInvalid;
  }

  set_worker_threads(opt.threads);
  Session s(opt, in, out);
  try {
    if (parse->parsed()) return cmd_parse(s);
    if (mem->parsed()) return cmd_member(s);
    if (uni->parsed()) return cmd_binary(s, OperationKind::Union);
    if (inter->parsed()) return cmd_binary(s, OperationKind::Intersect);
    if (many->parsed()) return cmd_intersect_many(s);
    if (comp->parsed()) return cmd_complement(s);
    if (pre->parsed()) return cmd_preimage(s);
    if (hil->parsed()) return cmd_hilbert(s);
    if (enu->parsed()) return cmd_enumerate(s);
    if (eq->parsed()) return cmd_eq(s);
    if (cert->parsed()) return cmd_certify(s);
    if (rnd->parsed()) return cmd_random(s);
  } catch (const ResourceLimitError& e) {
    report_error(err, e.code(), e.what(), {{"stage", e.stage()}, {"metric", e.metric()}, {"value", e.value()}});
    return kResource;
  } catch (const Error& e) {
    report_error(err, e.code(), e.what());
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    report_error(err, "invalid_input", e.what());
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace semilinear::cli
