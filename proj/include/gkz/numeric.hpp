#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gkz {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using Index = std::vector<int>;  // sorted 0-based index set

/// Dense row-major matrix. Only the handful of operations the algorithms
/// need are provided; everything else is done with explicit loops.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}
    Matrix(std::size_t r, std::size_t c, const T& fill) : rows_(r), cols_(c), data_(r * c, fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
        std::size_t c = rows.empty() ? cols : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i].at(j);
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_row(std::size_t i, const std::vector<T>& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void append_row(const std::vector<T>& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select_cols(const Index& idx) const {
        Matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.rows(), b.cols(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RatMatrix to_rat(const IntMatrix& m);
RatVec to_rat(const IntVec& v);
bool is_integral(const Rat& q);
bool is_integral(const RatVec& v);

/// "p/q" for proper fractions, "p" for integers.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);
Rat parse_rational(const std::string& s);

Int gcd_of(const IntVec& v);
Int lcm_of_denominators(const RatVec& v);
Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Index> subsets(int n, int k);
Index complement(const Index& s, int n);
bool is_subset(const Index& a, const Index& b);

/// 1-based text for diagnostics: "{1,2,3}".
std::string index_to_string(const Index& s);

}  // namespace gkz
