#include "k3lat/matrix.hpp"

#include <sstream>

namespace k3lat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r) e_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
        }
    return p;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = -(*this)(i, j);
    return m;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
    IntVec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(int a, int b, const Int& c) {
    for (int j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
}

void IntMatrix::add_col(int a, int b, const Int& c) {
    for (int i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
}

void IntMatrix::negate_row(int a) {
    for (int j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

void IntMatrix::negate_col(int a) {
    for (int i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
}

IntMatrix IntMatrix::column(int j) const {
    IntMatrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            os << (*this)(i, j).get_str();
            if (j + 1 < cols_) os << ",";
        }
        os << "]";
        if (i + 1 < rows_) os << ",";
    }
    os << "]";
    return os.str();
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), e_(static_cast<size_t>(rows_) * cols_) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch in product");
    RatMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
        }
    return p;
}

bool RatMatrix::is_integral() const {
    for (const Rat& x : e_)
        if (x.get_den() != 1) return false;
    return true;
}

IntMatrix RatMatrix::to_int() const {
    if (!is_integral()) throw std::domain_error("RatMatrix: not integral");
    IntMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).get_num();
    return m;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            os << (*this)(i, j).get_str();
            if (j + 1 < cols_) os << ",";
        }
        os << "]";
        if (i + 1 < rows_) os << ",";
    }
    os << "]";
    return os.str();
}

Int bilinear(const IntMatrix& m, const IntVec& v, const IntVec& w) {
    if (static_cast<int>(v.size()) != m.rows() || static_cast<int>(w.size()) != m.cols())
        throw std::invalid_argument("bilinear: vector length mismatch");
    Int s = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < m.cols(); ++j) row += m(i, j) * w[j];
        s += v[i] * row;
    }
    return s;
}

std::string vec_str(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        s += v[i].get_str();
        if (i + 1 < v.size()) s += ",";
    }
    s += ")";
    return s;
}

}  // namespace k3lat
