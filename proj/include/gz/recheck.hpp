#ifndef GZ_RECHECK_HPP
#define GZ_RECHECK_HPP

#include <string>

#include <json.hpp>

#include "gz/polytope.hpp"

namespace gz {

/// Re-verifies a serialized width certificate against a halfspace list,
/// from scratch: the vertex, directions and size are parsed back from the
/// JSON and every containment condition is re-evaluated in exact
/// arithmetic.  Shares no code with the certificate builder, so a
/// certificate that only the builder believes in will not pass.
///
/// On failure, `why` (if non-null) names the first check that failed.
bool recheck_certificate(const nlohmann::json& cert, const HPolytope& p, std::string* why);

/// Convenience wrapper for a full report file: reads "lambda" and
/// "certificate", rebuilds the halfspace list and re-verifies.
bool recheck_report(const nlohmann::json& report, std::string* why);

}  // namespace gz

#endif
