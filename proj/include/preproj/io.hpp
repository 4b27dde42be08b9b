#pragma once

#include "preproj/graded_rep.hpp"
#include "preproj/maya.hpp"
#include "preproj/tableaux.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace preproj {

using json = nlohmann::ordered_json;

/// Integer as a JSON number when it fits in 64 bits, a digit string otherwise;
/// non-integers as reduced "p/q" strings.
json rational_to_json(const Rational& r);
/// Accepts JSON integers and "p" / "p/q" strings; rejects non-reduced fractions.
Rational rational_from_json(const json& j);

json matrix_to_json(const RatMatrix& m);
/// `rows` and `cols` come from the surrounding module; "[]" is accepted for
/// any shape with no entries.
RatMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what);

/// Module interchange format: {"n", "dims", "right", "left"}.
json module_to_json(const GradedRep& m);
GradedRep module_from_json(const json& j);

std::string serialize_module(const GradedRep& m);
/// Full validation: JSON syntax, shapes, rational form, preprojective relations.
GradedRep parse_module_file(std::string_view text);

json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j, std::size_t n);

json intertwiner_to_json(const Intertwiner& phi);
json signature_to_json(const Signature& sig);
json int_vector_to_json(const std::vector<std::int64_t>& v);

}  // namespace preproj
