#pragma once

#include "snchodge/package.hpp"

namespace snchodge {

struct DegreeRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GluingMismatch : std::runtime_error {
    std::vector<Scalar> residual;
    GluingMismatch(const std::string& what, std::vector<Scalar> r)
        : std::runtime_error(what), residual(std::move(r)) {}
};

// One double locus: the components it lies on (lower < upper) and the two
// pullbacks per degree. delta_upper restricts from components[upper],
// delta_lower from components[lower]; the restriction map difference is
// taken as delta_upper minus delta_lower.
struct Incidence {
    int locus = 0;
    int lower = 0, upper = 0;
    std::map<int, Mat> delta_upper;
    std::map<int, Mat> delta_lower;

    const Mat* delta(int l, bool upper_side) const {
        const auto& m = upper_side ? delta_upper : delta_lower;
        auto it = m.find(l);
        return it == m.end() ? nullptr : &it->second;
    }
};

// A proper normal crossing configuration without triple intersections:
// smooth components of dimension n and double loci of dimension n-1.
struct SncVariety {
    int n = 0;
    std::vector<CohomologyPackage> components;
    std::vector<CohomologyPackage> loci;
    std::vector<Incidence> incidences;

    int components_dim(int l) const;  // explicit dim of the degree-l sum over components
    int loci_dim(int l) const;
    Dim components_total(int l) const;
    Dim loci_total(int l) const;
    int component_offset(int l, int i) const;
    int locus_offset(int l, int i) const;

    HodgeGrading components_grading(int l) const;
    HodgeGrading loci_grading(int l) const;

    // Block-diagonal Poincare Grams of the sums.
    Mat components_pairing(int l) const;
    Mat loci_pairing(int l) const;
};

std::vector<Finding> validate(const SncVariety& v);

// Restriction map on explicit coordinates, degree 0 <= l <= 2(n-1).
Mat rho(const SncVariety& v, int l);
// Gysin map: the Poincare adjoint of the complementary restriction map,
// degree 2 <= l <= 2n. Throws DegeneratePairing if a needed Gram is singular.
Mat gysin(const SncVariety& v, int l);

// Out-of-range degrees yield zero-shaped matrices instead of throwing.
Mat rho_full(const SncVariety& v, int l);
Mat gysin_full(const SncVariety& v, int l);

struct GluedLineBundle {
    std::vector<std::vector<Scalar>> classes;            // one degree-2 class per component
    std::vector<std::vector<Scalar>> locus_restriction;  // common restriction per locus
    std::vector<Scalar> concat() const;
};

GluedLineBundle glue_line_bundle(const SncVariety& v,
                                 const std::vector<std::vector<Scalar>>& classes);

std::vector<Scalar> concat_components_h2(const SncVariety& v,
                                         const std::vector<std::vector<Scalar>>& per_component);
std::vector<std::vector<Scalar>> split_components(const SncVariety& v, int l,
                                                  const std::vector<Scalar>& concat);
std::vector<std::vector<Scalar>> split_loci(const SncVariety& v, int l,
                                            const std::vector<Scalar>& concat);

}  // namespace snchodge
