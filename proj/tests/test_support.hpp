#pragma once

#include "snchodge/snc.hpp"

namespace testsupport {

// Brute-force signature oracle: characteristic polynomial by the
// Faddeev-LeVerrier recursion, square-free layers by repeated gcd, and root
// counts on the half-lines by Sturm chains. Independent of the congruence
// diagonalization it checks.
snchodge::Signature sturm_signature(const snchodge::Mat& gram);

// Hand-authored surface pair glued along two curve-like loci; the odd locus
// pairing is chosen isotropic on the restriction image when forced.
snchodge::SncVariety synthetic_two_locus(unsigned seed, bool force_isotropic);

}  // namespace testsupport
