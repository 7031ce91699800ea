#pragma once

// Dense linear algebra over a prime field F_p.
//
// Vectors are rows; a matrix acts on the right (v -> v * A).  Every
// routine is exact; there is no pivoting strategy beyond "first nonzero".

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tau_atlas {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

class Field {
public:
    Field() = default;
    explicit Field(Scalar p);

    Scalar p() const { return p_; }
    Scalar add(Scalar a, Scalar b) const {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Scalar inv(Scalar a) const;
    Scalar reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }

    bool operator==(const Field&) const = default;

private:
    Scalar p_ = 2;
};

bool is_prime(std::uint64_t p);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field);

    static Matrix identity(std::size_t n, Field field);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, Field field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const;
    void append_row(std::span<const Scalar> v);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(Scalar c) const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    bool is_zero() const;
    bool operator==(const Matrix& rhs) const;

    const std::vector<Scalar>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_{};
    std::vector<Scalar> data_;
};

Vec vec_times(const Vec& v, const Matrix& m);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
void vec_axpy(const Field& f, Vec& y, Scalar a, std::span<const Scalar> x);  // y += a*x
bool vec_is_zero(std::span<const Scalar> v);

struct Rref {
    Matrix reduced;                   // nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis (as rows) of { x : m * x^T = 0 }.
Matrix right_nullspace(const Matrix& m);
// Basis (as rows) of { v : v * m = 0 }.
Matrix left_nullspace(const Matrix& m);

// Inverse of a square matrix; throws if singular.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

// Incrementally maintained reduced row echelon basis of a subspace of F_p^dim.
class Echelon {
public:
    Echelon() = default;
    Echelon(std::size_t dim, Field field);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const Field& field() const { return field_; }

    // Returns true if v enlarged the subspace.
    bool insert(std::span<const Scalar> v);
    Vec reduce(std::span<const Scalar> v) const;
    bool contains(std::span<const Scalar> v) const;

    // Coordinates of v (assumed to lie in the span) in terms of basis rows.
    Vec coordinates(std::span<const Scalar> v) const;

    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Matrix matrix() const;

    // Non-pivot columns, ascending.
    std::vector<std::size_t> free_columns() const;

    bool operator==(const Echelon& rhs) const {
        return dim_ == rhs.dim_ && rows_ == rhs.rows_;
    }

private:
    std::size_t dim_ = 0;
    Field field_{};
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

Echelon span_of(const Matrix& rows);
Echelon intersect(const Echelon& a, const Echelon& b);

}  // namespace tau_atlas
