#include "snchodge/lefschetz.hpp"

namespace snchodge {

namespace {

Mat power_mult(const CohomologyPackage& p, const std::vector<Scalar>& cls, int l, int power) {
    Mat acc = Mat::identity(p.explicit_dim(l));
    for (int s = 0; s < power; ++s) acc = p.cup2_mult(cls, l + 2 * s) * acc;
    return acc;
}

// True when expanding a cup b cup c touches unreliable product entries.
// For a diagonal symbolic square the unresolved coefficient multiplies the
// fiber class, which pairs back only against the same index; a triple is
// tainted exactly when all three factors carry that index.
bool triple_symbolic(const CohomologyPackage& p, const std::vector<Scalar>& a,
                     const std::vector<Scalar>& b, const std::vector<Scalar>& c) {
    for (const auto& [i, j] : p.symbolic_products) {
        auto hit = [&](const std::vector<Scalar>& v, int idx) {
            return idx < int(v.size()) && !v[std::size_t(idx)].is_zero();
        };
        if (i == j) {
            if (hit(a, i) && hit(b, i) && hit(c, i)) return true;
        } else {
            int count_i = hit(a, i) + hit(b, i) + hit(c, i);
            int count_j = hit(a, j) + hit(b, j) + hit(c, j);
            if (count_i >= 1 && count_j >= 1) return true;
        }
    }
    return false;
}

Scalar hr_prefactor(int k, int p) {
    // (-1)^{k(k-1)/2} * i^{2p-k}
    Scalar pref(1);
    if ((long(k) * (k - 1) / 2) % 2 != 0) pref = -pref;
    int e = ((2 * p - k) % 4 + 4) % 4;
    static const Scalar table[4] = {Scalar(1), Scalar::unit_i(), Scalar(-1),
                                    -Scalar::unit_i()};
    return pref * table[e];
}

}  // namespace

LefschetzVerdict component_lefschetz(const CohomologyPackage& p,
                                     const std::vector<Scalar>& cls) {
    LefschetzVerdict out;
    out.bundle = cls;
    out.overall = true;
    for (int i = 1; i <= p.n; ++i) {
        LefschetzVerdict::Power pw;
        pw.i = i;
        pw.m = power_mult(p, cls, p.n - i, i);
        pw.rank = rank(pw.m);
        pw.src_dim = p.dim(p.n - i);
        pw.dst_dim = p.dim(p.n + i);
        // Basis-free parts are unreachable by cup with an explicit class, so
        // an isomorphism needs every dimension to be explicit here.
        pw.iso = (pw.src_dim == pw.dst_dim) && pw.src_dim.is_concrete() &&
                 pw.src_dim.fixed == p.explicit_dim(p.n - i) &&
                 pw.dst_dim.fixed == p.explicit_dim(p.n + i) && pw.m.rows() == pw.m.cols() &&
                 pw.rank == pw.m.rows();
        out.overall = out.overall && pw.iso;
        out.per_power.push_back(std::move(pw));
    }
    return out;
}

HRVerdict component_hr(const CohomologyPackage& p, const std::vector<Scalar>& cls) {
    HRVerdict out;
    // A class supported on a symbolic square makes every cup chain depend on
    // the unresolved parameter; nothing definite can be certified.
    if (p.product_is_symbolic(cls, cls)) {
        out.overall = TriState::inconclusive;
        return out;
    }
    out.lefschetz = component_lefschetz(p, cls);
    bool any_fail = !out.lefschetz.overall;
    bool any_unknown = false;

    for (int k = 0; k <= p.n; ++k) {
        // primitive part: kernel of cup with the (n-k+1)-st power
        Mat up = power_mult(p, cls, k, p.n - k + 1);
        Subspace prim = rank_kernel_image(up).kernel;
        Mat lpow = power_mult(p, cls, k, p.n - k);
        Mat gram_core = p.pairing_at(k) * lpow;  // <x, L^{n-k} cup y>

        for (const auto& block : p.at(k).hodge.blocks) {
            HRBlock hb;
            hb.k = k;
            hb.p = block.p;
            hb.q = block.q;
            hb.free_dim = block.free_dim;

            bool block_fail = false, block_unknown = false;
            if (block.space && block.space->dim() > 0) {
                Subspace bp = intersect(*block.space, prim);
                if (bp.dim() > 0) {
                    Mat g = (bp.basis.transpose() * gram_core * bp.basis.conj())
                                .scaled(hr_prefactor(k, block.p));
                    Signature sig = signature_of_gram(g, true);
                    hb.explicit_sig = sig;
                    if (!is_positive_definite(sig)) block_fail = true;
                } else {
                    hb.explicit_sig = Signature{0, 0, 0};
                }
            }
            if (block.has_free()) {
                // Free parts sit in the primitive middle; the signed form
                // there is minus the recorded hermitian pairing when
                // k(k-1)/2 is odd.
                bool sign_flips = (long(k) * (k - 1) / 2) % 2 != 0;
                if (block.free_sig == FreeSig::h_neg_definite && sign_flips)
                    hb.free_definite = true;
                else if (block.free_sig == FreeSig::h_neg_definite && !sign_flips)
                    block_fail = true;
                else
                    block_unknown = true;
            }
            hb.verdict = block_fail ? TriState::no
                                    : (block_unknown ? TriState::inconclusive : TriState::yes);
            any_fail = any_fail || block_fail;
            any_unknown = any_unknown || block_unknown;
            out.blocks.push_back(std::move(hb));
        }
    }
    out.overall =
        any_fail ? TriState::no : (any_unknown ? TriState::inconclusive : TriState::yes);
    return out;
}

namespace {

struct PieceBasis {
    Subspace reps;      // representatives in the ambient coordinates
    Subspace modulus;   // subspace quotiented out (may be zero)
    Dim free_dim;
};

PieceBasis piece_basis(const SncVariety& v, int k, int which /*0 low,1 mid,2 high*/) {
    PieceBasis pb;
    if (which == 0) {
        RankKernelImage rk = rank_kernel_image(rho_full(v, k - 1));
        pb.reps = quotient_basis(Subspace::full(v.loci_dim(k - 1)), rk.image);
        pb.modulus = rk.image;
        pb.free_dim = v.loci_total(k - 1) - Dim(v.loci_dim(k - 1));
    } else if (which == 1) {
        RankKernelImage rk_rho = rank_kernel_image(rho_full(v, k));
        RankKernelImage rk_gys = rank_kernel_image(gysin_full(v, k));
        pb.reps = quotient_basis(rk_rho.kernel, rk_gys.image);
        pb.modulus = rk_gys.image;
        pb.free_dim = v.components_total(k) - Dim(v.components_dim(k));
    } else {
        pb.reps = rank_kernel_image(gysin_full(v, k + 1)).kernel;
        pb.modulus = Subspace::zero(pb.reps.ambient_dim);
        pb.free_dim = v.loci_total(k - 1) - Dim(v.loci_dim(k - 1));
    }
    return pb;
}

Mat blockdiag_mult(const std::vector<CohomologyPackage>& ps,
                   const std::vector<std::vector<Scalar>>& cls, int l, int power) {
    int rows = 0, cols = 0;
    auto dims = [&](const CohomologyPackage& p, int deg) { return p.explicit_dim(deg); };
    for (const auto& p : ps) {
        rows += dims(p, l + 2 * power);
        cols += dims(p, l);
    }
    Mat m(rows, cols);
    int r = 0, c = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        Mat acc = Mat::identity(ps[i].explicit_dim(l));
        for (int s = 0; s < power; ++s) acc = ps[i].cup2_mult(cls[i], l + 2 * s) * acc;
        m.put(r, c, acc);
        r += acc.rows();
        c += acc.cols();
    }
    return m;
}

FiberCupPieceMap induced_piece_map(const PieceBasis& src, const PieceBasis& dst,
                                   const Mat& mult, std::vector<Finding>& findings,
                                   const std::string& label) {
    FiberCupPieceMap out;
    out.src_dim = Dim(src.reps.dim()) + src.free_dim;
    out.dst_dim = Dim(dst.reps.dim()) + dst.free_dim;
    Mat moved = mult * src.reps.basis;
    Mat sys = dst.reps.basis.hstack(dst.modulus.basis);
    auto sol = solve(sys, moved);
    if (!sol) {
        findings.push_back(
            Finding{"piece-map", label + ": image leaves the target piece"});
        return out;
    }
    Mat m(dst.reps.dim(), src.reps.dim());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = sol->at(i, j);
    out.rank = rank(m);
    out.m = std::move(m);
    // Cup with an explicit class kills basis-free parts, so an isomorphism
    // requires those to vanish on both sides.
    out.iso = src.free_dim.is_zero() && dst.free_dim.is_zero() &&
              src.reps.dim() == dst.reps.dim() && out.rank == src.reps.dim();
    return out;
}

}  // namespace

FiberCupResult fiber_cup_L(const SncVariety& v, const GluedLineBundle& bundle, int k,
                           int power) {
    FiberCupResult out;
    out.k = k;
    out.power = power;
    const int k2 = k + 2 * power;
    for (std::size_t j = 0; j < v.components.size(); ++j)
        if (v.components[j].product_is_symbolic(bundle.classes[j], bundle.classes[j]))
            out.findings.push_back(
                Finding{"symbolic-products",
                        v.components[j].name + ": cup chains depend on an unresolved parameter"});

    Mat comp_mult = blockdiag_mult(v.components, bundle.classes, k, power);
    Mat loci_mult_high = blockdiag_mult(v.loci, bundle.locus_restriction, k - 1, power);
    Mat loci_mult_gys = blockdiag_mult(v.loci, bundle.locus_restriction, k - 2, power);

    // The cup square against the restriction and gysin maps must commute.
    Mat lhs = rho_full(v, k2) * comp_mult;
    Mat rhs = blockdiag_mult(v.loci, bundle.locus_restriction, k, power) * rho_full(v, k);
    if (!(lhs - rhs).is_zero()) {
        out.squares_commute = false;
        out.findings.push_back(Finding{"square-commute", "restriction square fails"});
    }
    Mat lhs_g = comp_mult * gysin_full(v, k);
    Mat rhs_g = gysin_full(v, k2) * loci_mult_gys;
    if (!(lhs_g - rhs_g).is_zero()) {
        out.squares_commute = false;
        out.findings.push_back(Finding{"square-commute", "gysin square fails"});
    }

    PieceBasis low_src = piece_basis(v, k, 0), low_dst = piece_basis(v, k2, 0);
    PieceBasis mid_src = piece_basis(v, k, 1), mid_dst = piece_basis(v, k2, 1);
    PieceBasis high_src = piece_basis(v, k, 2), high_dst = piece_basis(v, k2, 2);

    out.low = induced_piece_map(low_src, low_dst, loci_mult_high, out.findings, "low");
    out.mid = induced_piece_map(mid_src, mid_dst, comp_mult, out.findings, "mid");
    out.high = induced_piece_map(high_src, high_dst, loci_mult_high, out.findings, "high");

    out.vacuous = out.low.src_dim.is_zero() && out.low.dst_dim.is_zero() &&
                  out.mid.src_dim.is_zero() && out.mid.dst_dim.is_zero() &&
                  out.high.src_dim.is_zero() && out.high.dst_dim.is_zero();
    out.all_iso = out.low.iso && out.mid.iso && out.high.iso && out.squares_commute;
    return out;
}

Scalar fiber_top_power(const SncVariety& v, const GluedLineBundle& bundle) {
    Scalar total;
    for (std::size_t i = 0; i < v.components.size(); ++i) {
        const auto& cls = bundle.classes[i];
        if (triple_symbolic(v.components[i], cls, cls, cls))
            throw MissingCupData(v.components[i].name +
                                 ": top power touches symbolic product data");
        total += v.components[i].top_power(cls);
    }
    return total;
}

FiberH2HR fiber_h2_hr(const SncVariety& v, const GluedLineBundle& bundle) {
    if (v.n != 3)
        throw std::invalid_argument("degree-2 fiber fragment needs a threefold configuration");
    FiberH2HR out;
    out.top_power = fiber_top_power(v, bundle);

    GradedPieces gp2 = graded_pieces(v, 2);
    if (!gp2.low.dim.is_zero() || !gp2.high.dim.is_zero()) {
        out.note = "side pieces of degree 2 are nonzero; fragment not computed";
        return out;
    }
    if (gp2.mid.dim.is_zero()) {
        out.vacuous = true;
        out.hr_L = TriState::no;  // no Lefschetz class on a fiber without degree-2 classes
        out.hr_L_inverse = TriState::no;
        out.note = "no degree-2 classes on the fiber";
        return out;
    }

    out.lefschetz_mid = fiber_cup_L(v, bundle, 2, 1).mid.iso;

    const Mat& reps = gp2.mid.space.basis;  // columns in the component sum coordinates
    auto split = [&](const std::vector<Scalar>& concat) {
        return split_components(v, 2, concat);
    };
    auto q_value = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                       bool& symbolic) -> Scalar {
        Scalar val;
        auto xs = split(x), ys = split(y);
        for (std::size_t j = 0; j < v.components.size(); ++j) {
            const auto& pj = v.components[j];
            const auto& lj = bundle.classes[j];
            if (triple_symbolic(pj, xs[j], ys[j], lj)) {
                symbolic = true;
                continue;
            }
            val += pj.pair(4, pj.cup_h2(xs[j], ys[j]), lj);
        }
        return val;
    };

    // primitive part: kernel of a -> a . L . L among representatives
    bool tainted = false;
    Mat lrow(1, reps.cols());
    std::vector<Scalar> lconc = bundle.concat();
    for (int c = 0; c < reps.cols(); ++c)
        lrow.at(0, c) = q_value(reps.col(c), lconc, tainted);
    Subspace prim_coeff = rank_kernel_image(lrow).kernel;

    auto gram_on = [&](const Subspace& coeff, bool& sym) {
        Mat g(coeff.dim(), coeff.dim());
        for (int a = 0; a < coeff.dim(); ++a)
            for (int b = 0; b < coeff.dim(); ++b) {
                std::vector<Scalar> ra = mat_vec(reps, coeff.basis.col(a));
                std::vector<Scalar> rb = mat_vec(reps, coeff.basis.col(b));
                g.at(a, b) = q_value(ra, rb, sym);
            }
        return g;
    };
    bool gram_tainted = tainted;
    Mat qgram = gram_on(prim_coeff, gram_tainted);
    if (gram_tainted) {
        // fall back to coefficient directions avoiding the symbolic squares
        std::vector<std::vector<Scalar>> avoid_rows;
        int offset = 0;
        for (const auto& comp : v.components) {
            for (const auto& [i, j] : comp.symbolic_products)
                for (int idx : {i, j}) {
                    std::vector<Scalar> row;
                    row.resize(std::size_t(reps.rows()));
                    row[std::size_t(offset + idx)] = Scalar(1);
                    avoid_rows.push_back(std::move(row));
                    if (i == j) break;
                }
            offset += comp.explicit_dim(2);
        }
        Mat avoid(int(avoid_rows.size()), reps.rows());
        for (int r = 0; r < int(avoid_rows.size()); ++r)
            for (int c = 0; c < reps.rows(); ++c)
                avoid.at(r, c) = avoid_rows[std::size_t(r)][std::size_t(c)];
        Subspace coeff_ok = rank_kernel_image(avoid * reps).kernel;
        Subspace clean = intersect(prim_coeff, coeff_ok);
        bool still = false;
        qgram = gram_on(clean, still);
        out.symbolic_skipped = true;
    }
    Signature qsig = signature_of_gram(qgram, false);
    out.primitive_sig = qsig;
    bool skipped = out.symbolic_skipped;

    int top_sign = out.top_power.is_zero() ? 0 : out.top_power.sign();
    // For the bundle: top power positive and -q positive definite on the
    // primitive part. For the inverse: top power negative and +q positive
    // definite there.
    auto verdict = [&](bool want_positive_top, bool flip_q) {
        long bad = flip_q ? qsig.n_pos : qsig.n_neg;  // entries violating definiteness
        long zero = qsig.n_zero;
        bool top_ok = want_positive_top ? (top_sign > 0) : (top_sign < 0);
        if (!out.lefschetz_mid || !top_ok || bad > 0 || zero > 0) return TriState::no;
        if (skipped) return TriState::inconclusive;
        return TriState::yes;
    };
    out.hr_L = verdict(true, true);
    out.hr_L_inverse = verdict(false, false);
    return out;
}

TriState monodromy_iso_hypothesis(const SncVariety& v, const GluedLineBundle& bundle) {
    bool any_unknown = false;
    for (std::size_t i = 0; i < v.components.size(); ++i) {
        TriState t = component_hr(v.components[i], bundle.classes[i]).overall;
        if (t == TriState::no) return TriState::no;
        if (t == TriState::inconclusive) any_unknown = true;
    }
    for (std::size_t i = 0; i < v.loci.size(); ++i) {
        TriState t = component_hr(v.loci[i], bundle.locus_restriction[i]).overall;
        if (t == TriState::no) return TriState::no;
        if (t == TriState::inconclusive) any_unknown = true;
    }
    return any_unknown ? TriState::inconclusive : TriState::yes;
}

}  // namespace snchodge
