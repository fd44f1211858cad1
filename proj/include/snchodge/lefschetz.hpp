#pragma once

#include "snchodge/weight_ss.hpp"

namespace snchodge {

enum class TriState { yes, no, inconclusive };

struct LefschetzVerdict {
    std::vector<Scalar> bundle;
    struct Power {
        int i = 0;
        Mat m;  // cup with the i-th power, middle-minus-i to middle-plus-i
        long rank = 0;
        Dim src_dim, dst_dim;
        bool iso = false;
    };
    std::vector<Power> per_power;
    bool overall = false;
};

// Hard Lefschetz test for one degree-2 class on one package.
LefschetzVerdict component_lefschetz(const CohomologyPackage& p,
                                     const std::vector<Scalar>& cls);

struct HRBlock {
    int k = 0, p = 0, q = 0;
    std::optional<Signature> explicit_sig;  // of the signed Gram, clean part
    Dim free_dim;
    bool free_definite = false;
    bool symbolic_skipped = false;  // part of the block not checkable exactly
    TriState verdict = TriState::inconclusive;
};

struct HRVerdict {
    LefschetzVerdict lefschetz;
    std::vector<HRBlock> blocks;
    TriState overall = TriState::inconclusive;
};

// Signed primitive pairings (-1)^{k(k-1)/2} i^{2p-k} <a cup conj(b) cup
// c1^{n-k}> tested for positive definiteness blockwise.
HRVerdict component_hr(const CohomologyPackage& p, const std::vector<Scalar>& cls);

struct FiberCupPieceMap {
    std::optional<Mat> m;
    long rank = 0;
    Dim src_dim, dst_dim;
    bool iso = false;
};

struct FiberCupResult {
    int k = 0, power = 0;
    FiberCupPieceMap low, mid, high;
    bool squares_commute = true;
    bool all_iso = false;    // implies the assembled filtered map is iso
    bool vacuous = false;    // all six piece dimensions vanish
    std::vector<Finding> findings;
};

// Cup with the i-th power of a glued bundle on the three weight pieces,
// degree k to degree k + 2i.
FiberCupResult fiber_cup_L(const SncVariety& v, const GluedLineBundle& bundle, int k,
                           int power);

// Sum of the top self-intersections of the per-component classes.
Scalar fiber_top_power(const SncVariety& v, const GluedLineBundle& bundle);

struct FiberH2HR {
    Scalar top_power;
    bool lefschetz_mid = false;
    std::optional<Signature> primitive_sig;  // of q(a) = a.a.L on the clean primitive part
    bool symbolic_skipped = false;
    bool vacuous = false;  // no degree-2 classes on the fiber
    TriState hr_L = TriState::inconclusive;
    TriState hr_L_inverse = TriState::inconclusive;
    std::string note;
};

// Hodge-Riemann fragment on the degree-2 cohomology of the smooth fiber of
// a threefold configuration, for the bundle and its inverse.
FiberH2HR fiber_h2_hr(const SncVariety& v, const GluedLineBundle& bundle);

// Conjunction of component_hr over every component and every double locus
// restriction of a glued bundle.
TriState monodromy_iso_hypothesis(const SncVariety& v, const GluedLineBundle& bundle);

}  // namespace snchodge
