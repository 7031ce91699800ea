#include "tau_atlas/matrix.hpp"

#include <algorithm>

namespace tau_atlas {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field::Field(Scalar p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("field modulus must be a prime below 2^31: " + std::to_string(p));
}

Scalar Field::inv(Scalar a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Scalar>(result);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, Field field) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Vec Matrix::row_vec(std::size_t r) const {
    auto s = row(r);
    return Vec(s.begin(), s.end());
}

void Matrix::append_row(std::span<const Scalar> v) {
    if (v.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(rows_, rhs.cols_, field_);
    const Scalar p = field_.p();
    std::vector<std::uint64_t> acc(rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar a = (*this)(i, k);
            if (a == 0) continue;
            const Scalar* br = rhs.data_.data() + k * rhs.cols_;
            for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] = (acc[j] + static_cast<std::uint64_t>(a) * br[j]) % p;
        }
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = static_cast<Scalar>(acc[j]);
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::scaled(Scalar c) const {
    Matrix out(*this);
    for (auto& x : out.data_) x = field_.mul(x, c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
    Matrix out(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_ == rhs.field_ && data_ == rhs.data_;
}

Vec vec_times(const Vec& v, const Matrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vec_times: shape mismatch");
    const Field& f = m.field();
    std::vector<std::uint64_t> acc(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        auto r = m.row(k);
        for (std::size_t j = 0; j < r.size(); ++j) acc[j] = (acc[j] + static_cast<std::uint64_t>(v[k]) * r[j]) % f.p();
    }
    return Vec(acc.begin(), acc.end());
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

void vec_axpy(const Field& f, Vec& y, Scalar a, std::span<const Scalar> x) {
    if (a == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) y[i] = f.add(y[i], f.mul(a, x[i]));
}

bool vec_is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

Rref rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
        Scalar inv = f.inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Scalar factor = f.neg(a(i, c));
            for (std::size_t j = c; j < a.cols(); ++j)
                if (a(r, j)) a(i, j) = f.add(a(i, j), f.mul(factor, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {a.block(0, 0, r, a.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    return rref(m).pivots.size();
}

Matrix right_nullspace(const Matrix& m) {
    const Field& f = m.field();
    Rref red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivots) is_pivot[c] = true;
    Matrix out(0, m.cols(), f);
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec x(m.cols(), 0);
        x[free] = 1;
        for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = f.neg(red.reduced(r, free));
        out.append_row(x);
    }
    return out;
}

Matrix left_nullspace(const Matrix& m) { return right_nullspace(m.transpose()); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(n, m.field()));
    Rref red = rref(aug);
    if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    return red.reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Echelon::Echelon(std::size_t dim, Field field) : dim_(dim), field_(field) {}

Vec Echelon::reduce(std::span<const Scalar> v) const {
    Vec out(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = out[pivots_[r]];
        if (c) vec_axpy(field_, out, field_.neg(c), rows_[r]);
    }
    return out;
}

bool Echelon::contains(std::span<const Scalar> v) const { return vec_is_zero(reduce(v)); }

bool Echelon::insert(std::span<const Scalar> v) {
    if (v.size() != dim_) throw std::invalid_argument("Echelon::insert: dimension mismatch");
    Vec w = reduce(v);
    std::size_t pc = 0;
    while (pc < dim_ && w[pc] == 0) ++pc;
    if (pc == dim_) return false;
    Scalar inv = field_.inv(w[pc]);
    for (auto& x : w) x = field_.mul(x, inv);
    for (auto& row : rows_) {
        Scalar c = row[pc];
        if (c) vec_axpy(field_, row, field_.neg(c), w);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pc);
    rows_.insert(rows_.begin() + idx, std::move(w));
    return true;
}

Vec Echelon::coordinates(std::span<const Scalar> v) const {
    Vec out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) out[r] = v[pivots_[r]];
    return out;
}

Matrix Echelon::matrix() const { return Matrix::from_rows(rows_, dim_, field_); }

std::vector<std::size_t> Echelon::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

Echelon span_of(const Matrix& rows) {
    Echelon e(rows.cols(), rows.field());
    for (std::size_t r = 0; r < rows.rows(); ++r) e.insert(rows.row(r));
    return e;
}

Echelon intersect(const Echelon& a, const Echelon& b) {
    const Field& f = a.field();
    Echelon out(a.dim(), f);
    if (a.rank() == 0 || b.rank() == 0) return out;
    // x*A = y*B  <=>  (x, -y) * [A; B] = 0
    Matrix stacked(a.rank() + b.rank(), a.dim(), f);
    for (std::size_t r = 0; r < a.rank(); ++r) std::copy(a.basis()[r].begin(), a.basis()[r].end(), stacked.row(r).begin());
    for (std::size_t r = 0; r < b.rank(); ++r)
        std::copy(b.basis()[r].begin(), b.basis()[r].end(), stacked.row(a.rank() + r).begin());
    Matrix kernel = left_nullspace(stacked);
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
        Vec v(a.dim(), 0);
        for (std::size_t r = 0; r < a.rank(); ++r) vec_axpy(f, v, kernel(k, r), a.basis()[r]);
        out.insert(v);
    }
    return out;
}

}  // namespace tau_atlas
