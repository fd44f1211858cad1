#pragma once

#include "snchodge/snc.hpp"

#include <map>
#include <optional>

namespace snchodge {

// A built configuration together with its named bundles and classes, all
// given per component in degree-2 coordinates.
struct Scenario {
    std::string id;
    SncVariety variety;
    std::map<std::string, std::vector<std::vector<Scalar>>> bundles;
    std::map<std::string, std::vector<std::vector<Scalar>>> named_classes;
    std::vector<std::string> notes;
};

// Product of projective spaces; monomial basis in the hyperplane classes.
CohomologyPackage product_proj(const std::vector<int>& ns);

// Hirzebruch surface: negative section h with h^2 = -n, fiber f.
CohomologyPackage hirzebruch(int n);

// Anticanonical K3 in the triple product of lines: explicit sub-basis
// f1, f2, f3 with Gram [[0,2,2],[2,0,2],[2,2,0]]; the remaining twenty
// directions are carried basis-free with recorded definiteness.
CohomologyPackage k3_anticanonical_p1cubed();

struct CurveData {
    std::vector<Scalar> h2_dot_curve;       // alpha . C over the degree-2 basis
    std::optional<long> genus;              // nullopt: unresolved parameter
    std::optional<Scalar> normal_degree;    // nullopt: depends on the parameter
};

// Blow-up of a threefold along disjoint smooth curves: degree 2 gains the
// exceptional classes, degree 4 the fiber classes, degree 3 a basis-free
// piece of dimension 2g per curve.
CohomologyPackage blowup3fold_along_curve(const CohomologyPackage& base,
                                          const std::vector<CurveData>& curves);

// Two Hirzebruch surfaces glued along a pair of sections crossing as the
// negative section of one against the positive section of the other.
Scenario hopf_f1();

// Blow-up of the triple product of lines along a+1 curves on an
// anticanonical K3, glued back to the product through a twisted
// identification of the K3.
Scenario hashimoto_sano(long a, std::optional<long> genus_last = std::nullopt);

// Blow-up of a quintic threefold along l disjoint (-1,-1)-curves, glued to
// quadric threefolds along the exceptional quadric surfaces.
Scenario clemens(long l, const std::vector<long>& degrees, long a = 1);

// Quartic threefold and a blown-up projective 3-space glued along a quartic
// K3 surface.
Scenario tyurin_quintic();

Scenario build_scenario(const std::string& id, const std::map<std::string, long>& params);

}  // namespace snchodge
