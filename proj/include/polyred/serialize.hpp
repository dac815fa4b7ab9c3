#pragma once

#include "polyred/certificate.hpp"
#include "polyred/verifier.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace polyred {

using Json = nlohmann::json;

/// {"family": name, "params": {...}}. Graphs carry "nodes" and a sorted
/// "edges" list of name pairs; matrices carry "columns" and "rows" as
/// lists of 1-based column indices.
Json instance_to_json(const FamilySpec& spec);
/// Throws ValidationError on a malformed document.
FamilySpec instance_from_json(const Json& j);

/// Rationals are "num/den" strings; the map is sparse over canonical
/// coordinate positions; face terms and fixings use label text.
Json certificate_to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
/// Throws UsageError on an empty list.
Json reports_to_json(const std::vector<VerificationReport>& reports);

Json vertices_to_json(const VertexSet& vs);

/// Pretty-printed with a trailing newline; keys sorted, so output is
/// byte-stable.
std::string dump(const Json& j);
/// Throws IoError when the file cannot be read, ValidationError when it
/// is not JSON.
Json read_json_file(const std::string& path);
/// Throws IoError when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

} // namespace polyred
