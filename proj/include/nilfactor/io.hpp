#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nilfactor/factorizer.hpp"
#include "nilfactor/forensics.hpp"

namespace nilfactor {

// Matrix file format, hand-authorable and bit-exact:
//   line 1: field spec ("QQ" or "GF(p)")
//   line 2: n
//   lines 3..n+2: n whitespace-separated entries each
// Entries are integers or a/b rationals; integers reduce mod p over GF(p).
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);

// JSON mirrors the text format field for field.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
nlohmann::json factorization_to_json(const Matrix& a, const Factorization& f);

nlohmann::json report_to_json(const ForensicReport& r);
ForensicReport report_from_json(const nlohmann::json& j);

}  // namespace nilfactor
