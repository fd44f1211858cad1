#pragma once

#include "snchodge/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace snchodge {

struct ContainmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct KindError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A linear subspace of Q(i)^ambient_dim; basis columns are independent.
// Zero-dimensional subspaces keep an explicit ambient dimension.
struct Subspace {
    int ambient_dim = 0;
    Mat basis;  // ambient_dim x dim

    Subspace() = default;
    Subspace(int ambient, Mat b);

    static Subspace zero(int ambient) { return Subspace(ambient, Mat(ambient, 0)); }
    static Subspace full(int ambient) { return Subspace(ambient, Mat::identity(ambient)); }
    static Subspace span_of(int ambient, const std::vector<std::vector<Scalar>>& vectors);

    int dim() const { return basis.cols(); }
};

// Reduced row echelon form; pivot column indices collected in *pivots.
Mat rref(Mat m, std::vector<int>* pivots = nullptr);

long rank(const Mat& m);

struct RankKernelImage {
    long rank = 0;
    Subspace kernel;  // subspace of the source
    Subspace image;   // spanned by pivot columns of the original matrix
};
RankKernelImage rank_kernel_image(const Mat& m);

// Solves A X = B; returns a particular solution (free variables zero),
// or nullopt if inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

Scalar det(Mat m);

bool contains(const Subspace& big, const Subspace& small);
bool same_span(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace span_sum(const Subspace& a, const Subspace& b);

// Representatives extending U to a basis of V; together with U's basis the
// returned vectors span V, and dim = dim V - dim U.
// Throws ContainmentError unless U is contained in V.
Subspace quotient_basis(const Subspace& v, const Subspace& u);

enum class FormKind { symmetric_bilinear, hermitian_sesquilinear, antisymmetric_bilinear };

// A pairing on Q(i)^n given by its Gram matrix. Bilinear kinds pair
// (x, y) -> x^T G y; the hermitian kind pairs (x, y) -> x^T G conj(y).
struct Form {
    Mat gram;
    FormKind kind = FormKind::symmetric_bilinear;

    Form() = default;
    Form(Mat g, FormKind k) : gram(std::move(g)), kind(k) {}
    int dim() const { return gram.rows(); }
    Scalar apply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    Mat restricted_gram(const Subspace& w) const;
    bool shape_consistent() const;
};

Subspace orth_complement(const Form& f, const Subspace& w);

struct Signature {
    long n_pos = 0, n_neg = 0, n_zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Exact congruence diagonalization. Requires a real symmetric or hermitian
// Gram; antisymmetric kinds are rejected with KindError.
Signature signature(const Form& f, const Subspace& w);
Signature signature_of_gram(Mat g, bool hermitian);

bool is_positive_definite(const Signature& s);

}  // namespace snchodge
