#pragma once

// Exact matrix algebra over Z and over Q[t,t^-1]: determinants,
// inverses over Q(t), Smith normal form, Hermitian signatures at
// unit-circle evaluations, and integer unimodular completion.

#include <optional>
#include <vector>

#include "clab/ring.hpp"

namespace clab {

class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[i * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[i * cols_ + j]; }

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator-() const;
    bool operator==(const IntMat& o) const
    { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    static IntMat block_diag(const IntMat& a, const IntMat& b);
    // P^T A P
    IntMat congruence(const IntMat& p) const;

    Int det() const;  // fraction-free Bareiss
    bool is_unimodular() const;
    // inverse of a unimodular matrix (adjugate / det)
    IntMat unimodular_inverse() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

class LaurentMat {
public:
    LaurentMat() : rows_(0), cols_(0) {}
    LaurentMat(int rows, int cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    static LaurentMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Laurent& at(int i, int j) { return e_[i * cols_ + j]; }
    const Laurent& at(int i, int j) const { return e_[i * cols_ + j]; }

    LaurentMat operator*(const LaurentMat& o) const;
    bool operator==(const LaurentMat& o) const
    { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Laurent det() const;       // fraction-free Bareiss over Q[t,t^-1]
    bool is_unimodular() const;  // det is a unit
    LaurentMat unimodular_inverse() const;

private:
    int rows_, cols_;
    std::vector<Laurent> e_;
};

// t*A - A^T for an integer Seifert matrix A
LaurentMat presentation_matrix(const IntMat& a);

// U*M*V = diag(D) with D_i | D_{i+1}; U, V unimodular over Q[t,t^-1];
// diagonal entries monic, trailing zeros for rank deficiency.
struct SmithForm {
    LaurentMat u, v;
    std::vector<Laurent> d;
};

SmithForm smith_normal_form(const LaurentMat& m);

// matrix of RationalFn with M * M^-1 = I exactly over Q(t)
std::vector<std::vector<RationalFn>> invert_over_fractions(const LaurentMat& m);

// Signature of (1-w)A + (1-conj(w))A^T at w = e^{2 pi i r}.
// Rejects evaluation at roots of det(tA - A^T) and near-zero eigenvalues.
int hermitian_signature(const IntMat& a, const Rat& r);
int hermitian_signature(const IntMat& a, double r);

// --- integer lattice utilities -------------------------------------------

// Smith normal form over Z: U*M*V = diag(d), U,V unimodular, d_i | d_{i+1},
// d_i >= 0.
struct IntSmithForm {
    IntMat u, v;
    std::vector<Int> d;
};

IntSmithForm int_smith_normal_form(const IntMat& m);

// Given an n x g integer matrix B whose columns span a rank-g primitive
// sublattice of Z^n, returns a unimodular n x n matrix whose first g
// columns span the same lattice.  Returns nullopt if the lattice is not
// primitive (not a direct summand).
std::optional<IntMat> complete_to_unimodular(const IntMat& b);

}  // namespace clab
