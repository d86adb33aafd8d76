// SPDX-License-Identifier: Apache-2.0
#include "semilinear/json_io.hpp"

#include <algorithm>
#include <cctype>

#include "semilinear/errors.hpp"

namespace semilinear::json_io {

namespace {

// Integers outside the 64-bit range travel through the DOM as strings with
// this prefix; dump() turns them back into bare numbers.
constexpr char kBigTag = '\x01';
constexpr std::string_view kBigTagEscaped = "\"\\u0001";

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

class DomBuilder : public nlohmann::json_sax<Json> {
 public:
  explicit DomBuilder(Json& root) : root_(root) {}

  bool null() override { return put(Json(nullptr)); }
  bool boolean(bool v) override { return put(Json(v)); }
  bool number_integer(number_integer_t v) override { return put(Json(v)); }
  bool number_unsigned(number_unsigned_t v) override { return put(Json(v)); }
  bool number_float(number_float_t v, const string_t& s) override {
    if (is_integer_token(s)) return put(Json(std::string(1, kBigTag) + s));
    return put(Json(v));
  }
  bool string(string_t& v) override { return put(Json(v)); }
  bool binary(binary_t&) override { throw InvalidInput("binary JSON values are not supported"); }
  bool start_object(std::size_t) override {
    Json* slot = put_slot(Json::object());
    stack_.push_back(slot);
    return true;
  }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    Json* slot = put_slot(Json::array());
    stack_.push_back(slot);
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    throw InvalidInput("JSON parse error at byte " + std::to_string(position) + ": " + ex.what());
  }

 private:
  bool put(Json v) {
    put_slot(std::move(v));
    return true;
  }
  Json* put_slot(Json v) {
    if (stack_.empty()) {
      root_ = std::move(v);
      return &root_;
    }
    Json& parent = *stack_.back();
    if (parent.is_array()) {
      parent.push_back(std::move(v));
      return &parent.back();
    }
    Json& slot = parent[key_];
    slot = std::move(v);
    return &slot;
  }

  Json& root_;
  std::vector<Json*> stack_;
  std::string key_;
};

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object()) throw InvalidInput(std::string("expected a JSON object with field \"") + name + "\"");
  auto it = obj.find(name);
  if (it == obj.end()) throw InvalidInput(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json& array_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_array()) throw InvalidInput(std::string("field \"") + name + "\" must be an array");
  return v;
}

std::size_t read_size(const Json& v, const char* what) {
  if (!v.is_number_unsigned()) throw InvalidInput(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<Integer> read_integers(const Json& v) {
  if (!v.is_array()) throw InvalidInput("expected an array of integers");
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(read_integer(e));
  return out;
}

}  // namespace

Json parse(std::string_view text) {
  Json root;
  DomBuilder builder(root);
  Json::sax_parse(text.begin(), text.end(), &builder);
  return root;
}

std::string dump(const Json& value, int indent) {
  std::string text = value.dump(indent);
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (true) {
    std::size_t hit = text.find(kBigTagEscaped, pos);
    if (hit == std::string::npos) break;
    out.append(text, pos, hit - pos);
    std::size_t start = hit + kBigTagEscaped.size();
    std::size_t end = text.find('"', start);
    out.append(text, start, end - start);
    pos = end + 1;
  }
  out.append(text, pos, std::string::npos);
  return out;
}

Json integer(const Integer& value) {
  if (value.fits_slong_p()) return Json(static_cast<std::int64_t>(value.get_si()));
  if (sgn(value) > 0 && value.fits_ulong_p()) return Json(static_cast<std::uint64_t>(value.get_ui()));
  return Json(std::string(1, kBigTag) + value.get_str());
}

Integer read_integer(const Json& value) {
  if (value.is_number_unsigned()) return Integer(static_cast<unsigned long>(value.get<std::uint64_t>()));
  if (value.is_number_integer()) return Integer(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    std::string digits = !s.empty() && s[0] == kBigTag ? s.substr(1) : s;
    if (is_integer_token(digits)) return Integer(digits);
  }
  throw InvalidInput("expected an integer, got " + dump(value));
}

Json to_json(const NatVector& v) {
  Json arr = Json::array();
  for (const auto& e : v.entries()) arr.push_back(integer(e));
  return arr;
}

Json to_json(std::span<const NatVector> vectors) {
  Json arr = Json::array();
  for (const auto& v : vectors) arr.push_back(to_json(v));
  return arr;
}

Json to_json(const SemilinearSet& set) {
  Json comps = Json::array();
  for (const auto& c : set.components()) {
    Json obj;
    obj["constants"] = to_json(c.constants());
    obj["periods"] = to_json(c.periods());
    comps.push_back(std::move(obj));
  }
  Json out;
  out["k"] = set.dimension();
  out["components"] = std::move(comps);
  return out;
}

Json to_json(const Metrics& m) {
  Json out;
  out["index_size"] = m.index_size;
  out["max_period_card"] = m.max_period_card;
  out["max_period_norm"] = integer(m.max_period_norm);
  out["max_const_norm"] = integer(m.max_const_norm);
  out["nu"] = integer(m.nu);
  out["constant_count"] = m.constant_count;
  out["max_const_card"] = m.max_const_card;
  return out;
}

Json to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

NatVector read_vector(const Json& value, std::optional<std::size_t> dimension) {
  NatVector v(read_integers(value));
  if (dimension && v.dimension() != *dimension) {
    throw DimensionError("vector " + v.to_string() + " has dimension " + std::to_string(v.dimension()) +
                         ", expected " + std::to_string(*dimension));
  }
  return v;
}

SemilinearSet read_set(const Json& value) {
  const std::size_t k = read_size(field(value, "k"), "\"k\"");
  if (k == 0) throw InvalidInput("\"k\" must be positive");
  std::vector<LinearComponent> comps;
  for (const auto& c : array_field(value, "components")) {
    std::vector<NatVector> constants;
    std::vector<NatVector> periods;
    for (const auto& v : array_field(c, "constants")) constants.push_back(read_vector(v, k));
    if (c.contains("periods")) {
      for (const auto& v : array_field(c, "periods")) periods.push_back(read_vector(v, k));
    }
    comps.emplace_back(std::move(constants), std::move(periods));
  }
  return SemilinearSet(k, std::move(comps));
}

IntegerMatrix read_matrix(const Json& value) {
  if (!value.is_array()) throw InvalidInput("matrix must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : value) rows.push_back(read_integers(r));
  return IntegerMatrix::from_rows(rows);
}

DiophantineSystem read_system(const Json& value) {
  IntegerMatrix a = read_matrix(field(value, "A"));
  std::vector<Integer> b(a.rows(), Integer(0));
  if (value.contains("b")) b = read_integers(value["b"]);
  std::map<std::size_t, VarConstraint> constraints;
  if (value.contains("constraints")) {
    for (const auto& c : array_field(value, "constraints")) {
      VarConstraint vc;
      if (c.contains("scale")) vc.scale = read_integer(c["scale"]);
      if (c.contains("offset")) vc.offset = read_integer(c["offset"]);
      constraints[read_size(field(c, "var"), "\"var\"")] = vc;
    }
  }
  return DiophantineSystem(std::move(a), std::move(b), std::move(constraints));
}

}  // namespace semilinear::json_io
