#include "autz/json_io.hpp"

#include <cstdint>

namespace autz {

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw document_error("bad integer string: \"" + s + "\"");
    return v;
  }
  throw document_error("matrix entries must be integers or decimal strings");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

IntMatrix matrix_from_rows(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw document_error("rows must be a non-empty array");
  const std::size_t r = rows.size();
  if (!rows[0].is_array()) throw document_error("each row must be an array");
  const std::size_t c = rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw document_error("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = integer_from_json(rows[i][j]);
  }
  return m;
}

json matrix_document(const IntMatrix& m) { return {{"n", m.rows()}, {"rows", matrix_to_json(m)}}; }

IntMatrix parse_matrix_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw document_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows")) throw document_error("expected an object with \"rows\"");
  IntMatrix m = matrix_from_rows(doc["rows"]);
  if (!m.square()) throw document_error("matrix must be square");
  if (doc.contains("n")) {
    const json& n = doc["n"];
    if (!n.is_number_integer() || n.get<std::int64_t>() != static_cast<std::int64_t>(m.rows()))
      throw document_error("\"n\" does not match the number of rows");
  }
  return m;
}

}  // namespace autz
