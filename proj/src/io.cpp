#include "preproj/io.hpp"

#include "preproj/error.hpp"

namespace preproj {

json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
  return r.to_string();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rational(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>(), true);
  fail(ErrorKind::invalid_input, "matrix entry must be an integer or a \"p/q\" string, got " + j.dump());
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  if (m.empty()) return rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array()) fail(ErrorKind::invalid_input, what + " must be an array of rows");
  RatMatrix m(rows, cols);
  if (rows == 0 || cols == 0) {
    // either [] or `rows` empty rows
    if (j.empty()) return m;
    if (j.size() == rows && std::all_of(j.begin(), j.end(), [](const json& r) { return r.is_array() && r.empty(); }))
      return m;
    fail(ErrorKind::invalid_input, what + " must be empty");
  }
  if (j.size() != rows)
    fail(ErrorKind::invalid_input, what + " has " + std::to_string(j.size()) + " rows, expected " +
                                       std::to_string(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      fail(ErrorKind::invalid_input, what + " row " + std::to_string(r) + " must have " +
                                         std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[c]);
  }
  return m;
}

json module_to_json(const GradedRep& m) {
  json j;
  j["n"] = m.n();
  j["dims"] = m.dims();
  j["right"] = json::array();
  j["left"] = json::array();
  for (const auto& r : m.rights()) j["right"].push_back(matrix_to_json(r));
  for (const auto& l : m.lefts()) j["left"].push_back(matrix_to_json(l));
  return j;
}

GradedRep module_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::invalid_input, "module must be a JSON object");
  for (const char* key : {"n", "dims", "right", "left"})
    if (!j.contains(key)) fail(ErrorKind::invalid_input, std::string("module is missing \"") + key + "\"");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 2)
    fail(ErrorKind::invalid_input, "\"n\" must be an integer >= 2");
  const auto n = j["n"].get<std::size_t>();

  const json& dj = j["dims"];
  if (!dj.is_array() || dj.size() != n - 1)
    fail(ErrorKind::invalid_input, "\"dims\" must list n-1 = " + std::to_string(n - 1) + " integers");
  std::vector<std::size_t> dims;
  for (const auto& d : dj) {
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0)
      fail(ErrorKind::invalid_input, "\"dims\" entries must be nonnegative integers");
    dims.push_back(d.get<std::size_t>());
  }

  const json& rj = j["right"];
  const json& lj = j["left"];
  if (!rj.is_array() || rj.size() != n - 2 || !lj.is_array() || lj.size() != n - 2)
    fail(ErrorKind::invalid_input, "\"right\" and \"left\" must each hold n-2 = " +
                                       std::to_string(n - 2) + " matrices");
  std::vector<RatMatrix> right, left;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    right.push_back(matrix_from_json(rj[k], dims[k + 1], dims[k],
                                     "right[" + std::to_string(k) + "] (vertex " + std::to_string(k + 1) +
                                         " -> " + std::to_string(k + 2) + ")"));
    left.push_back(matrix_from_json(lj[k], dims[k], dims[k + 1],
                                    "left[" + std::to_string(k) + "] (vertex " + std::to_string(k + 2) +
                                        " -> " + std::to_string(k + 1) + ")"));
  }
  return GradedRep::from_untrusted(n, std::move(dims), std::move(right), std::move(left));
}

std::string serialize_module(const GradedRep& m) { return module_to_json(m).dump(); }

GradedRep parse_module_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::invalid_input, std::string("malformed JSON: ") + e.what());
  }
  return module_from_json(j);
}

json tableau_to_json(const Tableau& t) {
  json j;
  j["shape"] = t.shape();
  j["rows"] = t.rows();
  return j;
}

Tableau tableau_from_json(const json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    fail(ErrorKind::invalid_input, "tableau must be an object with \"rows\"");
  std::vector<std::vector<std::size_t>> rows;
  try {
    rows = j["rows"].get<std::vector<std::vector<std::size_t>>>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::invalid_input, "tableau rows must be arrays of positive integers");
  }
  Tableau t(n, std::move(rows));
  if (j.contains("shape")) {
    auto shape = j["shape"].get<std::vector<std::size_t>>();
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape != t.shape()) fail(ErrorKind::invalid_input, "tableau \"shape\" does not match its rows");
  }
  return t;
}

json intertwiner_to_json(const Intertwiner& phi) {
  json j = json::array();
  for (const auto& p : phi.phis()) j.push_back(matrix_to_json(p));
  return j;
}

json signature_to_json(const Signature& sig) {
  json j = json::object();
  for (const auto& [a, count] : sig) j[a.to_string()] = count;
  return j;
}

json int_vector_to_json(const std::vector<std::int64_t>& v) { return json(v); }

}  // namespace preproj
