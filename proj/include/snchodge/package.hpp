#pragma once

#include "snchodge/hodge.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace snchodge {

struct Finding {
    std::string code;
    std::string detail;
};

struct MissingCupData : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegeneratePairing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cohomology of one smooth proper piece: per-degree coordinate spaces with
// Hodge gradings, Poincare pairings, and (optionally) cup products out of
// degree 2 plus flagged ample classes. Basis-free parts of a grading are
// assumed cup-orthogonal to the explicit coordinates and unreachable by
// every restriction map.
struct CohomologyPackage {
    std::string name;
    int n = 0;  // complex dimension

    struct DegreeData {
        Dim dim;              // total, including basis-free parts
        int explicit_dim = 0; // coordinate dimension
        HodgeGrading hodge;
    };
    std::vector<DegreeData> degrees;  // indexed 0 .. 2n

    // pairing[l]: Gram of H^l x H^{2n-l} on explicit coordinates.
    std::map<int, Mat> pairing;
    // cup2[l][i]: multiplication H^2-basis-vector-i : H^l -> H^{l+2}.
    std::map<int, std::vector<Mat>> cup2;
    std::vector<std::vector<Scalar>> ample_classes;
    // Pairs of degree-2 basis indices whose product data is unreliable
    // because it depends on an unresolved input parameter.
    std::set<std::pair<int, int>> symbolic_products;

    const DegreeData& at(int l) const;
    int explicit_dim(int l) const;
    Dim dim(int l) const;
    bool in_range(int l) const { return l >= 0 && l <= 2 * n; }

    // Gram of H^l x H^{2n-l}; derived by graded-sign transpose when only the
    // complementary degree is stored.
    Mat pairing_at(int l) const;
    Scalar pair(int l, const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    bool has_cup2(int l) const;
    // Matrix of cup with v (a degree-2 vector) from H^l to H^{l+2}.
    Mat cup2_mult(const std::vector<Scalar>& v, int l) const;
    // v1 cup v2 for degree-2 vectors, as an H^4 vector.
    std::vector<Scalar> cup_h2(const std::vector<Scalar>& v1,
                               const std::vector<Scalar>& v2) const;
    // Top self-intersection v^n as a scalar (n-fold cup paired into H^0).
    Scalar top_power(const std::vector<Scalar>& v) const;
    // True when computing <e_i cup e_j ...> would touch symbolic product data.
    bool product_is_symbolic(const std::vector<Scalar>& v1,
                             const std::vector<Scalar>& v2) const;

    bool is_flagged_ample(const std::vector<Scalar>& v) const;

    std::vector<Finding> validate() const;
};

}  // namespace snchodge
