#include "snchodge/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace snchodge {

Mat::Mat(int rows, int cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != std::size_t(rows) * cols)
        throw std::invalid_argument("matrix entry count does not match shape");
}

Mat Mat::of(int rows, int cols, std::initializer_list<long> entries) {
    if (std::size_t(rows) * cols != entries.size())
        throw std::invalid_argument("matrix literal count does not match shape");
    Mat m(rows, cols);
    int k = 0;
    for (long v : entries) m.e_[k++] = Scalar(v);
    return m;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::col_vector(const std::vector<Scalar>& v) {
    Mat m(int(v.size()), 1);
    for (int i = 0; i < int(v.size()); ++i) m.at(i, 0) = v[i];
    return m;
}

Mat Mat::from_cols(int rows, const std::vector<std::vector<Scalar>>& cols) {
    Mat m(rows, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        if (int(cols[j].size()) != rows)
            throw std::invalid_argument("column length does not match row count");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::conj() const {
    Mat c(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) c.at(i, j) = at(i, j).conj();
    return c;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Mat Mat::operator-() const { return scaled(Scalar(-1)); }

Mat Mat::scaled(const Scalar& s) const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
}

bool Mat::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

std::vector<Scalar> Mat::col(int j) const {
    std::vector<Scalar> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Scalar> Mat::row(int i) const {
    std::vector<Scalar> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
    Mat m(rows_, int(idx.size()));
    for (int j = 0; j < int(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
    return m;
}

Mat Mat::hstack(const Mat& right) const {
    if (empty() && right.empty()) return Mat(std::max(rows_, right.rows_), 0);
    if (rows_ != right.rows_) {
        if (cols_ == 0) return right;
        if (right.cols_ == 0) return *this;
        throw std::invalid_argument("hstack row mismatch");
    }
    Mat m(rows_, cols_ + right.cols_);
    m.put(0, 0, *this);
    m.put(0, cols_, right);
    return m;
}

Mat Mat::vstack(const Mat& below) const {
    if (cols_ != below.cols_) {
        if (rows_ == 0) return below;
        if (below.rows_ == 0) return *this;
        throw std::invalid_argument("vstack column mismatch");
    }
    Mat m(rows_ + below.rows_, cols_);
    m.put(0, 0, *this);
    m.put(rows_, 0, below);
    return m;
}

void Mat::put(int i, int j, const Mat& src) {
    if (i + src.rows_ > rows_ || j + src.cols_ > cols_)
        throw std::invalid_argument("block write out of range");
    for (int r = 0; r < src.rows_; ++r)
        for (int c = 0; c < src.cols_; ++c) at(i + r, j + c) = src.at(r, c);
}

void Mat::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void Mat::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

std::string Mat::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.at(i, j);
        os << "]";
    }
    return os << "]";
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Scalar> mat_vec(const Mat& m, const std::vector<Scalar>& v) {
    if (int(v.size()) != m.cols()) throw std::invalid_argument("mat_vec shape mismatch");
    std::vector<Scalar> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

}  // namespace snchodge
