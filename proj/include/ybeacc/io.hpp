#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "ybeacc/acc.hpp"
#include "ybeacc/catalog.hpp"

namespace ybeacc {

using Json = nlohmann::ordered_json;

// Complex numbers are [re, im]; doubles use the shortest round-trip form.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

// "1.5", "-2+3i", "1e-3-2.5i", "2i", "-i"
Complex parse_complex(std::string_view s);

Json matrix_to_json(const Matrix& m, Ordering ord);
std::pair<Matrix, Ordering> matrix_from_json(const Json& j);

Json params_to_json(const AccParams& p);
AccParams params_from_json(const Json& j);

Json instance_to_json(const FamilyInstance& inst);
FamilyInstance instance_from_json(const Json& j);

// label -> list of {coefficient, powers{name: exponent}}
Json constraint_table_json();

Json read_json_file(const std::string& path);
std::string dump(const Json& j);

}  // namespace ybeacc
