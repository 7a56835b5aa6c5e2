#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3lat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Dense matrix of arbitrary-precision integers. Row-major, value semantics.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntVec operator*(const IntVec& v) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    // row[a] += c * row[b]
    void add_row(int a, int b, const Int& c);
    void add_col(int a, int b, const Int& c);
    void negate_row(int a);
    void negate_col(int a);

    IntMatrix column(int j) const;
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

// Dense matrix of exact rationals (GMP keeps entries canonicalized).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
    }
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    RatMatrix operator*(const RatMatrix& rhs) const;
    bool is_integral() const;
    IntMatrix to_int() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

// v^T M w for integer vectors in the bilinear form M.
Int bilinear(const IntMatrix& m, const IntVec& v, const IntVec& w);

std::string vec_str(const IntVec& v);

}  // namespace k3lat
