#pragma once

#include <iosfwd>
#include <string>

#include "bridgelab/bridge_stats.hpp"

namespace bridgelab {

/// Shortest decimal text that parses back to the same double ('.' separator).
std::string format_double(double x);

/// Header row of grid values, then one row per replicate.
void write_ensemble_csv(std::ostream& out, const PathEnsemble& ens);

/// Inverse of write_ensemble_csv; metadata (scale hint, folding) is not stored.
PathEnsemble read_ensemble_csv(std::istream& in);

}  // namespace bridgelab
