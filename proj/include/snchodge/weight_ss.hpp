#pragma once

#include "snchodge/snc.hpp"

#include <variant>

namespace snchodge {

struct NotPure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First-page terms in total degree k: the only nonzero columns are
// H^{k-1}(double loci), H^k(components) and H^{k-1}(double loci) with a
// Tate twist.
struct E1Page {
    int k = 0;
    Dim upper_dim, middle_dim, lower_dim;
    HodgeGrading upper, middle, lower;
};

// One graded piece of the limit weight filtration: explicit representatives,
// induced grading, total dimension.
struct Piece {
    Subspace space;
    HodgeGrading hodge;
    Dim dim;
};

// Weight graded pieces of the limit H^k:
//   low  = cokernel of the restriction map in degree k-1 (weight k-1),
//   mid  = restriction kernel modulo gysin image in degree k (weight k),
//   high = gysin kernel in degree k+1 (weight k+1, grading twisted).
struct GradedPieces {
    int k = 0;
    Piece low, mid, high;
    std::optional<Mat> low_high_gram;  // cup pairing low x high, middle degree only
    std::optional<Mat> mid_gram;       // cup self-pairing on mid, middle degree only
};

struct MonodromyVerdict {
    int k = 0;
    Mat n1;  // explicit block of the induced map high -> low
    Dim high_dim, low_dim;
    bool is_iso = false;
    bool pure_hs = false;  // criterion established; false means not established
    // Exact witness: determinant, a kernel vector, or a dimension mismatch note.
    std::variant<Scalar, std::vector<Scalar>, std::string> witness;
};

struct CupNondegVerdict {
    bool nondeg = false;
    Mat gram;
    long rank = 0;
    long dim = 0;
};

struct EulerCheck {
    Dim fiber_side, e1_side;
    bool equal = false;
};

struct HodgeNumbers {
    int k = 0;
    std::vector<std::pair<int, Dim>> h;  // (p, h^{p,k-p})
    bool symmetric = false;
    Dim total;
};

E1Page e1_page(const SncVariety& v, int k);
GradedPieces graded_pieces(const SncVariety& v, int k);
Dim betti_fiber(const SncVariety& v, int k);
EulerCheck euler_check(const SncVariety& v);
MonodromyVerdict n1_map(const SncVariety& v, int k);
CupNondegVerdict cup_nondeg_on_image_rho(const SncVariety& v);

// Checks W = sum over r of (L^r primitive-part intersect W) inside the
// middle cohomology of the double loci; L is given per locus and must be
// flagged ample there.
bool lefschetz_compatible(const SncVariety& v,
                          const std::vector<std::vector<Scalar>>& ample_per_locus,
                          const Subspace& w);

// Throws NotPure unless the monodromy criterion holds in degree k.
HodgeNumbers fiber_hodge_numbers(const SncVariety& v, int k);

enum class StarMode { exact, sufficient, automatic };
enum class StarVerdict { positive, not_positive, inconclusive };

struct DesignatedAmple {
    int component = 0;
    std::vector<Scalar> cls;
};

struct PairingReport {
    StarVerdict verdict = StarVerdict::inconclusive;
    std::optional<Signature> explicit_sig;
    Dim free_dim;          // basis-free part entering the pairing
    bool free_definite = false;
    std::string note;
};

struct ConditionStarReport {
    StarMode requested = StarMode::automatic;
    bool exact_ran = false, sufficient_ran = false;
    PairingReport qw3_exact, qw2_exact;
    StarVerdict qw3_sufficient = StarVerdict::inconclusive;
    StarVerdict qw2_sufficient = StarVerdict::inconclusive;
    std::string sufficient_note;
    StarVerdict overall = StarVerdict::inconclusive;
};

// Positive-definiteness of the induced pairings on the (2,1) part of the
// middle weight piece of H^3 and the (1,1) part of the degree-4 gysin
// kernel; only meaningful for threefold configurations.
ConditionStarReport condition_star(const SncVariety& v, StarMode mode,
                                   const std::vector<DesignatedAmple>& designated = {});

}  // namespace snchodge
