#include "snchodge/weight_ss.hpp"

#include <sstream>

namespace snchodge {

namespace {

// Blockwise quotient of two gradings on the same ambient space; the image
// grading must sit inside the kernel grading block by block.
HodgeGrading quotient_grading(const HodgeGrading& ker, const HodgeGrading& img) {
    HodgeGrading out;
    out.weight = ker.weight;
    out.ambient_dim = ker.ambient_dim;
    for (const auto& kb : ker.blocks) {
        HodgeBlock res{kb.p, kb.q, std::nullopt, kb.free_dim, kb.free_sig};
        const HodgeBlock* ib = img.find(kb.p, kb.q);
        if (kb.space) {
            Subspace sub = (ib && ib->space) ? *ib->space : Subspace::zero(ker.ambient_dim);
            res.space = quotient_basis(*kb.space, sub);
        } else if (ib && ib->space && ib->space->dim() > 0) {
            throw ContainmentError("image block has no matching kernel block");
        }
        if (!res.dim().is_zero() || res.space) out.blocks.push_back(std::move(res));
    }
    return out;
}

Mat submatrix_rows(const Mat& m, int row_count) {
    Mat out(row_count, m.cols());
    for (int i = 0; i < row_count; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

// Multiplication by the per-locus degree-2 classes, iterated i times,
// assembled block-diagonally over the loci: H^l(X^(2)) -> H^{l+2i}(X^(2)).
Mat loci_power_mult(const SncVariety& v, const std::vector<std::vector<Scalar>>& cls,
                    int l, int power) {
    Mat acc = Mat::identity(v.loci_dim(l));
    for (int step = 0; step < power; ++step) {
        int src = l + 2 * step;
        Mat m(v.loci_dim(src + 2), v.loci_dim(src));
        int r = 0, c = 0;
        for (std::size_t i = 0; i < v.loci.size(); ++i) {
            const auto& locus = v.loci[i];
            Mat b = locus.cup2_mult(cls[i], src);
            m.put(r, c, b);
            r += b.rows();
            c += b.cols();
        }
        acc = m * acc;
    }
    return acc;
}

}  // namespace

E1Page e1_page(const SncVariety& v, int k) {
    E1Page page;
    page.k = k;
    page.upper = v.loci_grading(k - 1);
    page.middle = v.components_grading(k);
    page.lower = twist(v.loci_grading(k - 1), 1);
    page.upper_dim = v.loci_total(k - 1);
    page.middle_dim = v.components_total(k);
    page.lower_dim = page.upper_dim;
    return page;
}

GradedPieces graded_pieces(const SncVariety& v, int k) {
    GradedPieces gp;
    gp.k = k;

    Mat rho_km1 = rho_full(v, k - 1);
    Mat rho_k = rho_full(v, k);
    Mat gys_k = gysin_full(v, k);
    Mat gys_kp1 = gysin_full(v, k + 1);

    // low: cokernel of the restriction map one degree down.
    RankKernelImage rk_rho_km1 = rank_kernel_image(rho_km1);
    gp.low.space = quotient_basis(Subspace::full(v.loci_dim(k - 1)), rk_rho_km1.image);
    gp.low.hodge = induced_hodge(rho_km1, v.components_grading(k - 1),
                                 v.loci_grading(k - 1), Part::cokernel);
    gp.low.dim = v.loci_total(k - 1) - Dim(rk_rho_km1.rank);

    // mid: restriction kernel modulo gysin image.
    RankKernelImage rk_rho_k = rank_kernel_image(rho_k);
    RankKernelImage rk_gys_k = rank_kernel_image(gys_k);
    gp.mid.space = quotient_basis(rk_rho_k.kernel, rk_gys_k.image);
    HodgeGrading ker_grading =
        induced_hodge(rho_k, v.components_grading(k), v.loci_grading(k), Part::kernel);
    HodgeGrading img_grading = induced_hodge(gys_k, twist(v.loci_grading(k - 2), 1),
                                             v.components_grading(k), Part::image);
    gp.mid.hodge = quotient_grading(ker_grading, img_grading);
    gp.mid.dim = v.components_total(k) - Dim(rk_rho_k.rank) - Dim(rk_gys_k.rank);

    // high: gysin kernel one degree up, grading twisted.
    RankKernelImage rk_gys_kp1 = rank_kernel_image(gys_kp1);
    gp.high.space = rk_gys_kp1.kernel;
    gp.high.hodge = induced_hodge(gys_kp1, twist(v.loci_grading(k - 1), 1),
                                  v.components_grading(k + 1), Part::kernel);
    gp.high.dim = v.loci_total(k - 1) - Dim(rk_gys_kp1.rank);

    if (k == v.n) {
        gp.low_high_gram =
            gp.low.space.basis.transpose() * v.loci_pairing(k - 1) * gp.high.space.basis;
        gp.mid_gram =
            gp.mid.space.basis.transpose() * v.components_pairing(k) * gp.mid.space.basis;
    }
    return gp;
}

Dim betti_fiber(const SncVariety& v, int k) {
    GradedPieces gp = graded_pieces(v, k);
    return gp.low.dim + gp.mid.dim + gp.high.dim;
}

EulerCheck euler_check(const SncVariety& v) {
    EulerCheck ec;
    for (int k = 0; k <= 2 * v.n; ++k) {
        Dim b = betti_fiber(v, k);
        Dim e = v.components_total(k) - v.loci_total(k) - v.loci_total(k);
        if (k % 2 == 0) {
            ec.fiber_side += b;
            ec.e1_side += e;
        } else {
            ec.fiber_side += Dim(-b.fixed, -b.sym);
            ec.e1_side += Dim(-e.fixed, -e.sym);
        }
    }
    ec.equal = (ec.fiber_side == ec.e1_side);
    return ec;
}

MonodromyVerdict n1_map(const SncVariety& v, int k) {
    MonodromyVerdict out;
    out.k = k;

    Mat rho_km1 = rho_full(v, k - 1);
    Mat gys_kp1 = gysin_full(v, k + 1);
    RankKernelImage rk_rho = rank_kernel_image(rho_km1);
    RankKernelImage rk_gys = rank_kernel_image(gys_kp1);

    Subspace low_reps = quotient_basis(Subspace::full(v.loci_dim(k - 1)), rk_rho.image);
    const Subspace& high = rk_gys.kernel;

    Dim free_part = v.loci_total(k - 1) - Dim(v.loci_dim(k - 1));
    out.high_dim = Dim(high.dim()) + free_part;
    out.low_dim = Dim(low_reps.dim()) + free_part;

    // Induced by the identity: express each gysin-kernel vector in cokernel
    // representatives modulo the restriction image.
    Mat sys = low_reps.basis.hstack(rk_rho.image.basis);
    Mat n1(low_reps.dim(), high.dim());
    if (high.dim() > 0) {
        auto sol = solve(sys, high.basis);
        if (!sol) throw std::logic_error("cokernel decomposition failed");
        n1 = submatrix_rows(*sol, low_reps.dim());
    }
    out.n1 = n1;

    if (low_reps.dim() != high.dim()) {
        std::ostringstream os;
        os << "dimension mismatch: weight piece above has dim " << out.high_dim.str()
           << ", below has dim " << out.low_dim.str();
        out.is_iso = false;
        out.witness = os.str();
    } else if (n1.rows() == 0) {
        out.is_iso = true;
        out.witness = Scalar(1);
    } else {
        Scalar d = det(n1);
        if (d.is_zero()) {
            out.is_iso = false;
            out.witness = rank_kernel_image(n1).kernel.basis.col(0);
        } else {
            out.is_iso = true;
            out.witness = d;
        }
    }
    out.pure_hs = out.is_iso;
    return out;
}

CupNondegVerdict cup_nondeg_on_image_rho(const SncVariety& v) {
    CupNondegVerdict out;
    Subspace im = rank_kernel_image(rho_full(v, v.n - 1)).image;
    out.dim = im.dim();
    out.gram = im.basis.transpose() * v.loci_pairing(v.n - 1) * im.basis;
    out.rank = rank(out.gram);
    out.nondeg = (out.rank == out.dim);
    return out;
}

bool lefschetz_compatible(const SncVariety& v,
                          const std::vector<std::vector<Scalar>>& ample_per_locus,
                          const Subspace& w) {
    if (ample_per_locus.size() != v.loci.size())
        throw std::invalid_argument("one ample class per locus expected");
    for (std::size_t i = 0; i < v.loci.size(); ++i)
        if (!v.loci[i].is_flagged_ample(ample_per_locus[i]))
            throw std::invalid_argument(v.loci[i].name + ": class is not flagged ample");
    const int d = v.n - 1;  // middle degree of the loci
    if (w.ambient_dim != v.loci_dim(d))
        throw std::invalid_argument("subspace does not live in the middle loci cohomology");

    long covered = 0;
    for (int r = 0; 2 * r <= d; ++r) {
        int deg = d - 2 * r;
        // primitive part: kernel of multiplication by the (2r+1)-st power
        Mat up = loci_power_mult(v, ample_per_locus, deg, 2 * r + 1);
        Subspace prim = rank_kernel_image(up).kernel;
        Mat lift = loci_power_mult(v, ample_per_locus, deg, r);
        Mat piece_vectors = lift * prim.basis;
        Subspace piece = piece_vectors.cols() == 0
                             ? Subspace::zero(v.loci_dim(d))
                             : rank_kernel_image(piece_vectors).image;
        covered += intersect(piece, w).dim();
    }
    return covered == w.dim();
}

HodgeNumbers fiber_hodge_numbers(const SncVariety& v, int k) {
    MonodromyVerdict mv = n1_map(v, k);
    if (!mv.is_iso)
        throw NotPure("monodromy criterion not established in degree " + std::to_string(k));
    GradedPieces gp = graded_pieces(v, k);
    HodgeNumbers out;
    out.k = k;
    for (int p = 0; p <= k; ++p) {
        Dim h = gp.low.hodge.block_dim(p, k - 1 - p) + gp.mid.hodge.block_dim(p, k - p) +
                gp.high.hodge.block_dim(p, k + 1 - p);
        out.h.emplace_back(p, h);
        out.total += h;
    }
    out.symmetric = true;
    for (int p = 0; p <= k; ++p)
        if (!(out.h[std::size_t(p)].second == out.h[std::size_t(k - p)].second))
            out.symmetric = false;
    return out;
}

namespace {

PairingReport definiteness_of_block(const HodgeGrading& grading, int p, int q, Mat p_gram,
                                    const Scalar& prefactor) {
    PairingReport rep;
    const HodgeBlock* block = grading.find(p, q);
    if (!block) {
        rep.verdict = StarVerdict::positive;
        rep.note = "block is zero";
        rep.explicit_sig = Signature{0, 0, 0};
        return rep;
    }
    bool ok = true, unknown = false;
    if (block->space && block->space->dim() > 0) {
        Mat gram =
            (block->space->basis.transpose() * p_gram * block->space->basis.conj())
                .scaled(prefactor);
        Signature sig = signature_of_gram(gram, true);
        rep.explicit_sig = sig;
        if (!is_positive_definite(sig)) ok = false;
    } else {
        rep.explicit_sig = Signature{0, 0, 0};
    }
    rep.free_dim = block->free_dim;
    if (block->has_free()) {
        // Recorded fact: h = i^{p-q} cup is negative definite there, and the
        // pairing under test is -h, hence positive definite.
        if (block->free_sig == FreeSig::h_neg_definite)
            rep.free_definite = true;
        else
            unknown = true;
    }
    if (!ok) {
        rep.verdict = StarVerdict::not_positive;
    } else if (unknown) {
        rep.verdict = StarVerdict::inconclusive;
        rep.note = "basis-free part without recorded definiteness";
    } else {
        rep.verdict = StarVerdict::positive;
    }
    return rep;
}

}  // namespace

ConditionStarReport condition_star(const SncVariety& v, StarMode mode,
                                   const std::vector<DesignatedAmple>& designated) {
    if (v.n != 3)
        throw std::invalid_argument("condition (*) is defined for threefold configurations");
    ConditionStarReport rep;
    rep.requested = mode;

    if (mode == StarMode::exact || mode == StarMode::automatic) {
        rep.exact_ran = true;
        GradedPieces gp = graded_pieces(v, 3);
        // Q_{W3}(x, conj y) = -i <x, conj y> on the (2,1) part of mid.
        rep.qw3_exact = definiteness_of_block(gp.mid.hodge, 2, 1, v.components_pairing(3),
                                              -Scalar::unit_i());
        // Q_{W2}(x, conj y) = -<x, conj y> on the (1,1) part of the gysin
        // kernel; the kernel grading is twisted, so the block label is (2,2).
        rep.qw2_exact = definiteness_of_block(gp.high.hodge, 2, 2, v.loci_pairing(2),
                                              Scalar(-1));
    }

    if (mode == StarMode::sufficient || mode == StarMode::automatic) {
        rep.sufficient_ran = true;
        Dim h01 = v.components_grading(1).block_dim(0, 1);
        rep.qw3_sufficient = h01.is_zero() ? StarVerdict::positive : StarVerdict::inconclusive;
        if (!h01.is_zero()) rep.sufficient_note = "h^{0,1} of the components does not vanish";

        std::vector<DesignatedAmple> designated_eff = designated;
        if (designated_eff.empty())
            for (int i = 0; i < int(v.components.size()); ++i)
                if (!v.components[std::size_t(i)].ample_classes.empty())
                    designated_eff.push_back(
                        DesignatedAmple{i, v.components[std::size_t(i)].ample_classes.front()});

        Mat r2 = rho_full(v, 2);
        std::vector<std::vector<Scalar>> images;
        for (const auto& da : designated_eff) {
            std::vector<std::vector<Scalar>> padded;
            for (int i = 0; i < int(v.components.size()); ++i)
                padded.push_back(i == da.component
                                     ? da.cls
                                     : std::vector<Scalar>(std::size_t(
                                           v.components[std::size_t(i)].explicit_dim(2))));
            images.push_back(mat_vec(r2, concat_components_h2(v, padded)));
        }
        Dim h0_loci;
        for (const auto& d : v.loci) h0_loci += d.dim(0);
        if (images.empty()) {
            rep.qw2_sufficient = StarVerdict::inconclusive;
            rep.sufficient_note += "; no designated ample classes";
        } else {
            Subspace v2 = Subspace::span_of(v.loci_dim(2), images);
            // V2 must be (1,1), of dimension h^0 of the double loci, with
            // positive definite cup Gram.
            HodgeGrading loci_g2 = v.loci_grading(2);
            Subspace h11 = Subspace::zero(v.loci_dim(2));
            if (const HodgeBlock* b = loci_g2.find(1, 1); b && b->space) h11 = *b->space;
            bool type_ok = contains(h11, v2);
            bool dim_ok = Dim(v2.dim()) == h0_loci;
            Signature sig = signature_of_gram(
                v2.basis.transpose() * v.loci_pairing(2) * v2.basis, false);
            rep.qw2_sufficient = (type_ok && dim_ok && is_positive_definite(sig))
                                     ? StarVerdict::positive
                                     : StarVerdict::inconclusive;
        }
    }

    auto combine = [](StarVerdict a, StarVerdict b) {
        if (a == StarVerdict::not_positive || b == StarVerdict::not_positive)
            return StarVerdict::not_positive;
        if (a == StarVerdict::inconclusive || b == StarVerdict::inconclusive)
            return StarVerdict::inconclusive;
        return StarVerdict::positive;
    };
    if (rep.exact_ran) {
        StarVerdict qw3 = rep.qw3_exact.verdict, qw2 = rep.qw2_exact.verdict;
        if (rep.sufficient_ran) {
            // exact wins where it decides; the sufficient route fills gaps
            if (qw3 == StarVerdict::inconclusive) qw3 = rep.qw3_sufficient;
            if (qw2 == StarVerdict::inconclusive) qw2 = rep.qw2_sufficient;
        }
        rep.overall = combine(qw3, qw2);
    } else {
        rep.overall = combine(rep.qw3_sufficient, rep.qw2_sufficient);
    }
    return rep;
}

}  // namespace snchodge
