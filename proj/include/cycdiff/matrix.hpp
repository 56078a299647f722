/* Dense exact linear algebra over F_q: elimination, rank, nullspace,
 * solving, and Jordan block sizes of a fixed eigenvalue via the nullity
 * profile of powers.  Desk scale; no attempt at asymptotics.
 */

#pragma once

#include "cycdiff/fq.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cycdiff {

class FqMatrix {
public:
    FqMatrix() : field_(nullptr), rows_(0), cols_(0) {}
    FqMatrix(const Fq* field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FqMatrix identity(const Fq* field, size_t n);

    const Fq* field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Fq::Elem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    Fq::Elem at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix operator-(const FqMatrix& o) const;
    FqMatrix operator+(const FqMatrix& o) const;
    FqMatrix pow(long long n) const;

    /* A - c*I (square only) */
    FqMatrix shifted(Fq::Elem c) const;

    bool operator==(const FqMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    size_t rank() const;
    size_t nullity() const { return cols_ - rank(); }

    /* Basis of the right nullspace, as column vectors. */
    std::vector<std::vector<Fq::Elem>> nullspace() const;

    /* One solution x of A x = b, or nullopt if inconsistent. */
    std::optional<std::vector<Fq::Elem>> solve(const std::vector<Fq::Elem>& b) const;

    /* In-place reduced row echelon form; returns pivot column indices. */
    std::vector<size_t> rref();

private:
    const Fq* field_;
    size_t rows_, cols_;
    std::vector<Fq::Elem> a_;
};

/* Jordan block sizes of M for the eigenvalue c: the number of blocks of
 * size >= i is nullity((M-cI)^i) - nullity((M-cI)^(i-1)).  Returns the
 * multiset {size -> count}; sizes sum to the generalized eigenspace
 * dimension (empty map if c is not an eigenvalue). */
std::map<size_t, size_t> unipotent_block_sizes(const FqMatrix& m, Fq::Elem c);

}  // namespace cycdiff
