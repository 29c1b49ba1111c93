#pragma once

#include <string>

#include <json.hpp>

#include "mubtk/haar.hpp"
#include "mubtk/linalg.hpp"
#include "mubtk/mub.hpp"
#include "mubtk/pdcert.hpp"
#include "mubtk/witness.hpp"

namespace mubtk {

using json = nlohmann::json;

// Matrix wire format: {"dim": d, "entries": [[re, im], ...]} row-major.
// The reader rejects wrong-length entry arrays and non-finite numbers.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const MubSystem& s);
MubSystem mub_system_from_json(const json& j);

json to_json(const IntegralEstimate& e);
json to_json(const GramReport& r);
json to_json(const AuditReport& r);
json to_json(const VerifyReport& r);
json to_json(const EpsScanResult& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mubtk
