#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heapcrys/rational.hpp"

namespace heapcrys {

using Vector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vector>& rows, int cols);
    static Matrix from_ints(const std::vector<std::vector<long long>>& rows);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    [[nodiscard]] Vector row(int r) const;
    [[nodiscard]] Vector column(int c) const;
    [[nodiscard]] Vector apply(const Vector& v) const;
    [[nodiscard]] Matrix transposed() const;
    [[nodiscard]] bool is_zero() const;

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator+(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator-(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator*(const Rational& scalar, const Matrix& m);
    friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix reduced;           // reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  // pivot column of each row
};

Echelon row_reduce(const Matrix& m);
int rank(const Matrix& m);
// Basis of {x : m x = 0}.
std::vector<Vector> kernel(const Matrix& m);

// A linear subspace of Q^d, stored as the row space of a canonical RREF.
class Subspace {
public:
    explicit Subspace(int ambient_dim = 0) : ambient_(ambient_dim) {}

    static Subspace span(int ambient_dim, const std::vector<Vector>& generators);
    static Subspace coordinate(int ambient_dim, const std::vector<int>& coords);
    static Subspace whole(int ambient_dim);

    [[nodiscard]] int ambient_dim() const { return ambient_; }
    [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
    [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<int>& pivots() const { return pivots_; }

    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;

    [[nodiscard]] Subspace sum(const Subspace& other) const;
    [[nodiscard]] Subspace intersect(const Subspace& other) const;
    // Image under a linear map given as a (target_dim x ambient_dim) matrix.
    [[nodiscard]] Subspace image(const Matrix& map) const;
    // {x : map x lies in target}.
    static Subspace preimage(const Matrix& map, const Subspace& target);

    // dim(this ∩ span(e_c : c in coords)).
    [[nodiscard]] int dim_meet_coordinate(const std::vector<int>& coords) const;
    // Coordinates c with e_c spanning the subspace, when it is a coordinate subspace.
    [[nodiscard]] std::optional<std::vector<int>> coordinate_support() const;

    friend bool operator==(const Subspace& lhs, const Subspace& rhs) = default;

private:
    int ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<int> pivots_;
};

std::string to_string(const Vector& v);

}  // namespace heapcrys
