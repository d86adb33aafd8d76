// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semilinear/diophantine.hpp"
#include "semilinear/nat_vector.hpp"
#include "semilinear/semilinear_set.hpp"

namespace semilinear::json_io {

using Json = nlohmann::json;

/// Parses JSON text. Integers that do not fit 64 bits are kept exactly
/// (as tagged strings internally) so that read_integer can recover them.
Json parse(std::string_view text);

/// Serializes, writing tagged big integers back as bare decimal numbers.
/// indent < 0 gives the compact single-line form.
std::string dump(const Json& value, int indent = -1);

Json integer(const Integer& value);
Integer read_integer(const Json& value);

Json to_json(const NatVector& v);
Json to_json(const SemilinearSet& set);
Json to_json(const Metrics& m);
Json to_json(const IntegerMatrix& m);
Json to_json(std::span<const NatVector> vectors);

NatVector read_vector(const Json& value, std::optional<std::size_t> dimension = std::nullopt);
SemilinearSet read_set(const Json& value);
IntegerMatrix read_matrix(const Json& value);

/// {"A": [[...]], "b": [...], "constraints": [{"var": j, "scale": s, "offset": o}]}.
/// A missing "b" means the zero right-hand side.
DiophantineSystem read_system(const Json& value);

}  // namespace semilinear::json_io
