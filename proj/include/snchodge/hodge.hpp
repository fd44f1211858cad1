#pragma once

#include "snchodge/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace snchodge {

struct TypeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension count with an optional symbolic part: fixed + sym * g, where g
// stands for one unresolved integer parameter of the input (an unspecified
// curve genus). Purely additive bookkeeping.
struct Dim {
    long fixed = 0;
    long sym = 0;

    Dim() = default;
    Dim(long f) : fixed(f) {}
    Dim(long f, long s) : fixed(f), sym(s) {}

    bool is_concrete() const { return sym == 0; }
    bool is_zero() const { return fixed == 0 && sym == 0; }
    Dim operator+(const Dim& o) const { return Dim(fixed + o.fixed, sym + o.sym); }
    Dim operator-(const Dim& o) const { return Dim(fixed - o.fixed, sym - o.sym); }
    Dim& operator+=(const Dim& o) {
        fixed += o.fixed;
        sym += o.sym;
        return *this;
    }
    friend bool operator==(const Dim&, const Dim&) = default;
    std::string str() const;
};

// Recorded fact about the hermitian pairing h(x, y) = i^(p-q) <x, conj y>
// on a basis-free part of a block.
enum class FreeSig { unknown, h_neg_definite };

// One (p, q) piece of a grading: an explicit part (subspace of the ambient
// coordinate space) and/or a basis-free part carried by dimension only.
struct HodgeBlock {
    int p = 0, q = 0;
    std::optional<Subspace> space;  // explicit part
    Dim free_dim;                   // basis-free part
    FreeSig free_sig = FreeSig::unknown;

    long explicit_dim() const { return space ? space->dim() : 0; }
    bool has_free() const { return !free_dim.is_zero(); }
    Dim dim() const { return Dim(explicit_dim()) + free_dim; }
};

struct HodgeGrading {
    int weight = 0;
    int ambient_dim = 0;  // dimension of the explicit coordinate space
    std::vector<HodgeBlock> blocks;

    Dim total_dim() const;
    long explicit_total() const;
    bool all_explicit() const;
    Dim block_dim(int p, int q) const;
    const HodgeBlock* find(int p, int q) const;
    HodgeBlock& find_or_add(int p, int q);

    static HodgeGrading single(int weight, int p, int q, const Subspace& s);
    static HodgeGrading empty(int weight, int ambient) {
        HodgeGrading g;
        g.weight = weight;
        g.ambient_dim = ambient;
        return g;
    }

    std::vector<std::string> consistency_findings() const;
};

// Tate twist by m: every (p, q) becomes (p+m, q+m), weight shifts by 2m.
// Underlying spaces are unchanged.
HodgeGrading twist(const HodgeGrading& h, int m);

// Direct sum with ambient coordinate blocks laid out in order.
HodgeGrading direct_sum(const std::vector<const HodgeGrading*>& parts);

enum class Part { kernel, image, cokernel };

// Extra blockwise matrices for basis-free parts, keyed by source (p, q).
struct BlockMap {
    int p = 0, q = 0;
    Mat m;
};

// Blockwise kernel/image/cokernel grading of a type-preserving map given on
// explicit ambient coordinates. Explicit source blocks must land inside the
// target block of equal (p, q) (TypeViolation otherwise). Basis-free parts
// are handled when the matching target block is absent (map forced zero) or
// a per-block matrix is supplied; the model convention is that basis-free
// parts are never reached through explicit coordinates.
HodgeGrading induced_hodge(const Mat& map, const HodgeGrading& source,
                           const HodgeGrading& target, Part part,
                           const std::vector<BlockMap>& block_maps = {});

// True iff conjugating each explicit (p, q) basis spans the (q, p) explicit
// part and basis-free dimensions are mirror-symmetric.
bool check_conjugation_symmetry(const HodgeGrading& h);

// Derived check of weight-k opposedness for fully explicit gradings:
// F^p = sum of blocks with first index >= p, and F^p plus the conjugate of
// F^{k-p+1} must decompose the ambient space for every p.
bool k_opposed(const HodgeGrading& h);

}  // namespace snchodge
