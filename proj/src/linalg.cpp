#include "snchodge/linalg.hpp"

#include <algorithm>
#include <utility>

namespace snchodge {

Subspace::Subspace(int ambient, Mat b) : ambient_dim(ambient), basis(std::move(b)) {
    if (basis.rows() != ambient) throw std::invalid_argument("basis ambient mismatch");
    if (rank(basis) != basis.cols())
        throw std::invalid_argument("subspace basis columns are dependent");
}

Subspace Subspace::span_of(int ambient, const std::vector<std::vector<Scalar>>& vectors) {
    Mat m = Mat::from_cols(ambient, vectors);
    RankKernelImage rki = rank_kernel_image(m);
    return rki.image;
}

Mat rref(Mat m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        m.swap_rows(r, p);
        Scalar inv = Scalar(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

long rank(const Mat& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return long(pivots.size());
}

RankKernelImage rank_kernel_image(const Mat& m) {
    std::vector<int> pivots;
    Mat r = rref(m, &pivots);

    RankKernelImage out;
    out.rank = long(pivots.size());
    out.image = Subspace(m.rows(), m.cols_subset(pivots));

    // One kernel vector per free column, read off the reduced form.
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    Mat kernel(m.cols(), m.cols() - int(pivots.size()));
    int kcol = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        kernel.at(c, kcol) = Scalar(1);
        for (int pr = 0; pr < int(pivots.size()); ++pr)
            kernel.at(pivots[pr], kcol) = -r.at(pr, c);
        ++kcol;
    }
    out.kernel = Subspace(m.cols(), std::move(kernel));
    return out;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    std::vector<int> pivots;
    Mat aug = rref(a.hstack(b), &pivots);
    for (int p : pivots)
        if (p >= a.cols()) return std::nullopt;  // pivot in the rhs block
    Mat x(a.cols(), b.cols());
    for (int pr = 0; pr < int(pivots.size()); ++pr)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[pr], j) = aug.at(pr, a.cols() + j);
    return x;
}

Scalar det(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Scalar d(1);
    for (int c = 0; c < m.cols(); ++c) {
        int p = -1;
        for (int i = c; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return Scalar(0);
        if (p != c) {
            m.swap_rows(c, p);
            d = -d;
        }
        d *= m.at(c, c);
        Scalar inv = Scalar(1) / m.at(c, c);
        for (int i = c + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) * inv;
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

bool contains(const Subspace& big, const Subspace& small) {
    if (big.ambient_dim != small.ambient_dim)
        throw std::invalid_argument("ambient dimension mismatch");
    if (small.dim() == 0) return true;
    return solve(big.basis, small.basis).has_value();
}

bool same_span(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && contains(a, b) && contains(b, a);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("ambient dimension mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim);
    // Kernel of [A | -B] gives coefficient pairs with A x = B y.
    Mat paired = a.basis.hstack(-b.basis);
    Subspace ker = rank_kernel_image(paired).kernel;
    std::vector<std::vector<Scalar>> vecs;
    for (int j = 0; j < ker.dim(); ++j) {
        std::vector<Scalar> column = ker.basis.col(j);
        std::vector<Scalar> coeff(column.begin(), column.begin() + a.dim());
        vecs.push_back(mat_vec(a.basis, coeff));
    }
    if (vecs.empty()) return Subspace::zero(a.ambient_dim);
    return Subspace::span_of(a.ambient_dim, vecs);
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("ambient dimension mismatch");
    return rank_kernel_image(a.basis.hstack(b.basis)).image;
}

Subspace quotient_basis(const Subspace& v, const Subspace& u) {
    if (v.ambient_dim != u.ambient_dim)
        throw std::invalid_argument("ambient dimension mismatch");
    if (!contains(v, u))
        throw ContainmentError("quotient_basis: subspace is not contained in the ambient one");
    // Greedy extension: pivot columns of [U | V] beyond the U block.
    std::vector<int> pivots;
    rref(u.basis.hstack(v.basis), &pivots);
    std::vector<int> chosen;
    for (int p : pivots)
        if (p >= u.dim()) chosen.push_back(p - u.dim());
    Mat reps = v.basis.cols_subset(chosen);
    return Subspace(v.ambient_dim, std::move(reps));
}

Scalar Form::apply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> ry = y;
    if (kind == FormKind::hermitian_sesquilinear)
        for (Scalar& s : ry) s = s.conj();
    std::vector<Scalar> gy = mat_vec(gram, ry);
    return dot(x, gy);
}

Mat Form::restricted_gram(const Subspace& w) const {
    if (w.ambient_dim != gram.rows())
        throw std::invalid_argument("form/subspace ambient mismatch");
    Mat right = (kind == FormKind::hermitian_sesquilinear) ? w.basis.conj() : w.basis;
    return w.basis.transpose() * gram * right;
}

bool Form::shape_consistent() const {
    if (gram.rows() != gram.cols()) return false;
    switch (kind) {
        case FormKind::symmetric_bilinear:
            return gram == gram.transpose();
        case FormKind::hermitian_sesquilinear:
            return gram == gram.conj_transpose();
        case FormKind::antisymmetric_bilinear:
            return gram == -gram.transpose();
    }
    return false;
}

Subspace orth_complement(const Form& f, const Subspace& w) {
    if (w.ambient_dim != f.dim())
        throw std::invalid_argument("form/subspace ambient mismatch");
    if (w.dim() == 0) return Subspace::full(w.ambient_dim);
    // v with f(v, w_j) = 0 for all j: kernel of (G * W)^T, conjugating W for
    // the hermitian pairing.
    Mat right = (f.kind == FormKind::hermitian_sesquilinear) ? w.basis.conj() : w.basis;
    Mat cond = (f.gram * right).transpose();
    return rank_kernel_image(cond).kernel;
}

Signature signature_of_gram(Mat g, bool hermitian) {
    const int n = g.rows();
    if (g.cols() != n) throw std::invalid_argument("gram not square");
    Signature sig;

    auto add_rowcol = [&](int dst, int src, const Scalar& c) {
        // row_dst += c * row_src, then the mirrored column operation.
        for (int j = 0; j < n; ++j) g.at(dst, j) += c * g.at(src, j);
        Scalar cc = hermitian ? c.conj() : c;
        for (int i = 0; i < n; ++i) g.at(i, dst) += cc * g.at(i, src);
    };

    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int t = k; t < n; ++t)
            if (!g.at(t, t).is_zero()) {
                piv = t;
                break;
            }
        if (piv < 0) {
            // All remaining diagonal entries vanish; manufacture one from a
            // nonzero off-diagonal entry.
            int r = -1, s = -1;
            for (int i = k; i < n && r < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!g.at(i, j).is_zero()) {
                        r = i;
                        s = j;
                        break;
                    }
            if (r < 0) {
                sig.n_zero += n - k;
                break;
            }
            Scalar c(1);
            if (hermitian && g.at(r, s).re == 0) c = Scalar::unit_i();
            add_rowcol(r, s, c);
            if (g.at(r, r).is_zero())
                throw std::logic_error("congruence pivot construction failed");
            piv = r;
        }
        if (piv != k) {
            g.swap_rows(k, piv);
            g.swap_cols(k, piv);
        }
        const Scalar& p = g.at(k, k);
        if (!p.is_real())
            throw KindError("diagonal entry not real during congruence diagonalization");
        if (p.sign() > 0)
            ++sig.n_pos;
        else
            ++sig.n_neg;
        for (int i = k + 1; i < n; ++i) {
            if (g.at(i, k).is_zero()) continue;
            Scalar f = -(g.at(i, k) / p);
            add_rowcol(i, k, f);
        }
    }
    return sig;
}

Signature signature(const Form& f, const Subspace& w) {
    if (f.kind == FormKind::antisymmetric_bilinear)
        throw KindError("signature is undefined for antisymmetric forms");
    Mat g = f.restricted_gram(w);
    if (f.kind == FormKind::symmetric_bilinear) {
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j)
                if (!g.at(i, j).is_real())
                    throw KindError("signature of a symmetric form needs real entries");
    }
    return signature_of_gram(std::move(g), f.kind == FormKind::hermitian_sesquilinear);
}

bool is_positive_definite(const Signature& s) { return s.n_neg == 0 && s.n_zero == 0; }

}  // namespace snchodge
