#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "logamoeba/amoeba.hpp"
#include "logamoeba/critlocus.hpp"
#include "logamoeba/laurent.hpp"
#include "logamoeba/lyashko.hpp"
#include "logamoeba/nodal.hpp"
#include "logamoeba/scan.hpp"

namespace logamoeba {

using json = nlohmann::ordered_json;

// Schemas:
//   polynomial   {"terms": [{"a": int, "b": int, "re": float, "im": float}]}
//   template     {"base": polynomial, "slope": polynomial}
//   components   {"components": [polynomial, ...]}
//   arrangement  [{"a_re", "a_im", "b_re", "b_im", "family", "theta", "rho"}]
//   divisor      {"degree": m, "entries": [{"u_re", "u_im", "v_re", "v_im", "mult"}]}
// Readers throw InvalidInput on schema violations.

json to_json(const BivariateLaurent& f);
BivariateLaurent polynomial_from_json(const json& j);

json to_json(const FamilyTemplate& t);
FamilyTemplate template_from_json(const json& j);

std::vector<BivariateLaurent> components_from_json(const json& j);

json to_json(const std::vector<LineSpec>& lines);
std::vector<LineSpec> arrangement_from_json(const json& j);

json to_json(const ProjPoint& p);
json to_json(const DivisorCP1& D);
DivisorCP1 divisor_from_json(const json& j, double tol = 1e-6);

json to_json(const BinaryForm& F);
json to_json(const CriticalPointSet& crit);
json to_json(const NodalCurve& curve);
json to_json(const Diagnostic& d);
json to_json(const ScanResult& scan);
json to_json(const MonodromyResult& r);
json to_json(const AmoebaImage& img);

/// Throws IoError when unreadable, InvalidInput when not JSON.
json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline. Throws IoError.
void write_json_file(const std::string& path, const json& j);

}  // namespace logamoeba
