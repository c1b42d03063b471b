#pragma once

#include <map>
#include <vector>

#include "schur/field.hpp"

namespace schur {

// Sparse exact matrix over a fixed field, stored as rows of
// column -> nonzero-entry maps. Most matrices here are generalized
// permutation matrices, so maps stay tiny.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Field f);
    static Matrix identity(std::size_t n, Field f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    void set(std::size_t i, std::size_t j, const Scalar& v);  // storing zero erases
    void add_at(std::size_t i, std::size_t j, const Scalar& v);
    Scalar at(std::size_t i, std::size_t j) const;  // zero when absent
    const std::map<std::size_t, Scalar>& row(std::size_t i) const { return data_[i]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    std::size_t nonzero_count() const;

    // one nonzero per row and per column, entries +-1
    bool is_generalized_permutation() const;

    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix hstack(const Matrix& left, const Matrix& right);

    std::string str() const;  // dense printout, small matrices only

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<std::map<std::size_t, Scalar>> data_;
};

// Reduced row echelon form. Pivot choice is deterministic: scan columns
// left to right, take the first remaining row with a nonzero entry.
struct Echelon {
    Matrix rref;                       // zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon reduced_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);

// Subspace of F^ambient held as a reduced-echelon row basis.
class Subspace {
public:
    static Subspace zero(std::size_t ambient, Field f);
    static Subspace full(std::size_t ambient, Field f);
    static Subspace from_rows(const Matrix& spanning_rows);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    const Field& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const std::map<std::size_t, Scalar>& v) const;
    bool contains_rows(const Matrix& rows) const;

    // double inclusion, tested by rank of the stacked bases
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    explicit Subspace(Echelon e) : basis_(std::move(e.rref)), pivots_(std::move(e.pivots)) {}
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace image(const Matrix& m);   // column space
Subspace kernel(const Matrix& m);  // right null space

// Surjection F^ambient -> F^(ambient - dim sub) with kernel exactly sub.
Matrix quotient_map(std::size_t ambient_dim, const Subspace& sub);
// Section of the quotient map: quotient_map * quotient_section = identity.
Matrix quotient_section(std::size_t ambient_dim, const Subspace& sub);

}  // namespace schur
