#pragma once

#include "snchodge/scalar.hpp"

#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace snchodge {

// Dense matrix over the Gaussian rationals, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}
    Mat(int rows, int cols, std::vector<Scalar> entries);

    // Row-major literal, e.g. Mat::of(2, 2, {1, 0, 0, 1}).
    static Mat of(int rows, int cols, std::initializer_list<long> entries);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat identity(int n);
    static Mat col_vector(const std::vector<Scalar>& v);
    static Mat from_cols(int rows, const std::vector<std::vector<Scalar>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    Mat transpose() const;
    Mat conj() const;
    Mat conj_transpose() const { return conj().transpose(); }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& s) const;
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    bool is_zero() const;

    std::vector<Scalar> col(int j) const;
    std::vector<Scalar> row(int i) const;
    Mat cols_subset(const std::vector<int>& idx) const;
    Mat hstack(const Mat& right) const;
    Mat vstack(const Mat& below) const;

    // Block write: copies src into *this with upper-left corner (i, j).
    void put(int i, int j, const Mat& src);

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> mat_vec(const Mat& m, const std::vector<Scalar>& v);

}  // namespace snchodge
