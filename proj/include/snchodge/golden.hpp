#pragma once

#include "snchodge/lefschetz.hpp"
#include "snchodge/geometries.hpp"

#include <iosfwd>

namespace snchodge {

// Runs the stored exact reference values for one built-in scenario and
// prints one line per comparison. Returns false on any mismatch.
bool reproduce_scenario(const std::string& id, const std::map<std::string, long>& params,
                        std::ostream& os);

// Exact reference computation used by the reproduction checks: the folded
// degree-4 matrix of cup with a glued bundle against three chosen kernel
// classes, for two-component configurations whose second component pulls
// back into the first.
Mat folded_cup_matrix(const Scenario& s, const std::vector<std::string>& class_names,
                      const std::vector<int>& h4_rows);

// q(x, y) = sum over components of <x cup y cup L> for degree-2 classes.
Scalar triple_with_bundle(const SncVariety& v,
                          const std::vector<std::vector<Scalar>>& x,
                          const std::vector<std::vector<Scalar>>& y,
                          const std::vector<std::vector<Scalar>>& bundle);

}  // namespace snchodge
