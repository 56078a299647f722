#include "cycdiff/matrix.hpp"

#include <stdexcept>

namespace cycdiff {

FqMatrix FqMatrix::identity(const Fq* field, size_t n) {
    FqMatrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("FqMatrix: dimension mismatch in product");
    FqMatrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            Fq::Elem aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                Fq::Elem v = o.at(k, j);
                if (v != 0) r.at(i, j) = field_->add(r.at(i, j), field_->mul(aik, v));
            }
        }
    return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("FqMatrix: dimension mismatch");
    FqMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
    return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("FqMatrix: dimension mismatch");
    FqMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
    return r;
}

FqMatrix FqMatrix::pow(long long n) const {
    if (rows_ != cols_) throw std::invalid_argument("FqMatrix: pow of non-square matrix");
    FqMatrix r = identity(field_, rows_);
    FqMatrix base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

FqMatrix FqMatrix::shifted(Fq::Elem c) const {
    if (rows_ != cols_) throw std::invalid_argument("FqMatrix: shift of non-square matrix");
    FqMatrix r = *this;
    for (size_t i = 0; i < rows_; ++i) r.at(i, i) = field_->sub(r.at(i, i), c);
    return r;
}

std::vector<size_t> FqMatrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = row;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
        Fq::Elem inv = field_->inv(at(row, col));
        for (size_t j = col; j < cols_; ++j) at(row, j) = field_->mul(at(row, j), inv);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            Fq::Elem v = at(i, col);
            if (v == 0) continue;
            for (size_t j = col; j < cols_; ++j)
                at(i, j) = field_->sub(at(i, j), field_->mul(v, at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t FqMatrix::rank() const {
    FqMatrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Fq::Elem>> FqMatrix::nullspace() const {
    FqMatrix r = *this;
    std::vector<size_t> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Fq::Elem>> basis;
    for (size_t freec = 0; freec < cols_; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Fq::Elem> v(cols_, 0);
        v[freec] = field_->one();
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = field_->neg(r.at(k, freec));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Fq::Elem>> FqMatrix::solve(const std::vector<Fq::Elem>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("FqMatrix: rhs size mismatch");
    FqMatrix aug(field_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    for (size_t c : pivots)
        if (c == cols_) return std::nullopt;  // inconsistent
    std::vector<Fq::Elem> x(cols_, 0);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, cols_);
    return x;
}

std::map<size_t, size_t> unipotent_block_sizes(const FqMatrix& m, Fq::Elem c) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("unipotent_block_sizes: matrix must be square");
    const size_t n = m.rows();
    FqMatrix b = m.shifted(c);
    /* nullities of successive powers; stop once stable */
    std::vector<size_t> nullity{0};
    FqMatrix power = FqMatrix::identity(m.field(), n);
    while (true) {
        power = power * b;
        size_t nu = power.nullity();
        if (nu == nullity.back()) break;
        nullity.push_back(nu);
        if (nullity.size() > n + 1) break;
    }
    std::map<size_t, size_t> blocks;
    const size_t depth = nullity.size() - 1;
    for (size_t i = 1; i <= depth; ++i) {
        size_t ge_i = nullity[i] - nullity[i - 1];
        size_t ge_next = (i + 1 <= depth) ? nullity[i + 1] - nullity[i] : 0;
        if (ge_i > ge_next) blocks[i] = ge_i - ge_next;
    }
    return blocks;
}

}  // namespace cycdiff
