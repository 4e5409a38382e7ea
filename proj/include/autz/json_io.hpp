#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "autz/int_matrix.hpp"

namespace autz {

using json = nlohmann::json;

/// Malformed matrix document or entry.
class document_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON number when the value fits in 64 bits, decimal string otherwise.
json integer_to_json(const Integer& v);
/// Accepts integral numbers and decimal strings.
Integer integer_from_json(const json& j);

json vector_to_json(const Vector& v);
/// Array of rows.
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_rows(const json& rows);

/// {"n": n, "rows": [[...], ...]}
json matrix_document(const IntMatrix& m);
/// Parses a square matrix document. Throws document_error.
IntMatrix parse_matrix_document(const std::string& text);

}  // namespace autz
