#include "heapcrys/linalg.hpp"

#include <algorithm>
#include <set>

#include "heapcrys/errors.hpp"

namespace heapcrys {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw Error("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long long>>& rows) {
    const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw Error("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(int r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                  data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

Vector Matrix::column(int c) const {
    Vector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::apply(const Vector& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("matrix/vector size mismatch");
    Vector out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational acc;
        for (int c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (a.is_zero() || v[c].is_zero()) continue;
            acc += a * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw Error("matrix product size mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (int r = 0; r < lhs.rows_; ++r) {
        for (int k = 0; k < lhs.cols_; ++k) {
            const Rational& a = lhs(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < rhs.cols_; ++c) {
                const Rational& b = rhs(k, c);
                if (!b.is_zero()) out(r, c) += a * b;
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw Error("matrix sum size mismatch");
    Matrix out = lhs;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw Error("matrix difference size mismatch");
    Matrix out = lhs;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

Matrix operator*(const Rational& scalar, const Matrix& m) {
    Matrix out = m;
    for (auto& x : out.data_) x *= scalar;
    return out;
}

namespace {

// In-place Gauss-Jordan on a vector of rows; returns pivot columns and drops zero rows.
std::vector<int> gauss_jordan(std::vector<Vector>& rows, int cols) {
    std::vector<int> pivots;
    int next = 0;
    const int n = static_cast<int>(rows.size());
    for (int c = 0; c < cols && next < n; ++c) {
        int pick = -1;
        for (int r = next; r < n; ++r) {
            if (!rows[r][c].is_zero()) {
                pick = r;
                break;
            }
        }
        if (pick < 0) continue;
        std::swap(rows[next], rows[pick]);
        Vector& pivot_row = rows[next];
        const Rational inv = Rational(1) / pivot_row[c];
        if (inv != Rational(1)) {
            for (int k = c; k < cols; ++k)
                if (!pivot_row[k].is_zero()) pivot_row[k] *= inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == next || rows[r][c].is_zero()) continue;
            const Rational factor = rows[r][c];
            for (int k = c; k < cols; ++k)
                if (!pivot_row[k].is_zero()) rows[r][k] -= factor * pivot_row[k];
        }
        pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    return pivots;
}

std::vector<Vector> rows_of(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

}  // namespace

Echelon row_reduce(const Matrix& m) {
    std::vector<Vector> rows = rows_of(m);
    std::vector<int> pivots = gauss_jordan(rows, m.cols());
    return Echelon{Matrix::from_rows(rows, m.cols()), std::move(pivots)};
}

int rank(const Matrix& m) {
    std::vector<Vector> rows = rows_of(m);
    return static_cast<int>(gauss_jordan(rows, m.cols()).size());
}

std::vector<Vector> kernel(const Matrix& m) {
    std::vector<Vector> rows = rows_of(m);
    const int cols = m.cols();
    const std::vector<int> pivots = gauss_jordan(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Subspace Subspace::span(int ambient_dim, const std::vector<Vector>& generators) {
    Subspace s(ambient_dim);
    std::vector<Vector> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient_dim) throw Error("generator has wrong dimension");
        if (std::any_of(g.begin(), g.end(), [](const Rational& x) { return !x.is_zero(); })) rows.push_back(g);
    }
    s.pivots_ = gauss_jordan(rows, ambient_dim);
    s.basis_ = std::move(rows);
    return s;
}

Subspace Subspace::coordinate(int ambient_dim, const std::vector<int>& coords) {
    std::set<int> sorted(coords.begin(), coords.end());
    Subspace s(ambient_dim);
    for (int c : sorted) {
        if (c < 0 || c >= ambient_dim) throw Error("coordinate out of range");
        Vector v(ambient_dim);
        v[c] = 1;
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(c);
    }
    return s;
}

Subspace Subspace::whole(int ambient_dim) {
    std::vector<int> all(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) all[i] = i;
    return coordinate(ambient_dim, all);
}

bool Subspace::contains(const Vector& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw Error("vector has wrong dimension");
    Vector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const int p = pivots_[k];
        if (r[p].is_zero()) continue;
        const Rational factor = r[p];
        for (int c = p; c < ambient_; ++c)
            if (!basis_[k][c].is_zero()) r[c] -= factor * basis_[k][c];
    }
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error("subspaces live in different spaces");
    if (other.dim() > dim()) return false;
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error("subspaces live in different spaces");
    std::vector<Vector> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error("subspaces live in different spaces");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    if (dim() == ambient_) return other;
    if (other.dim() == ambient_) return *this;
    // Zassenhaus: reduce [u | u] and [w | 0]; rows with vanishing left half span the meet.
    const int d = ambient_;
    std::vector<Vector> rows;
    for (const auto& u : basis_) {
        Vector r(2 * d);
        for (int c = 0; c < d; ++c) r[c] = r[d + c] = u[c];
        rows.push_back(std::move(r));
    }
    for (const auto& w : other.basis_) {
        Vector r(2 * d);
        for (int c = 0; c < d; ++c) r[c] = w[c];
        rows.push_back(std::move(r));
    }
    const std::vector<int> pivots = gauss_jordan(rows, 2 * d);
    std::vector<Vector> meet;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] < d) continue;
        meet.emplace_back(rows[k].begin() + d, rows[k].end());
    }
    return span(d, meet);
}

Subspace Subspace::image(const Matrix& map) const {
    if (map.cols() != ambient_) throw Error("map does not act on this subspace");
    std::vector<Vector> gens;
    gens.reserve(basis_.size());
    for (const auto& v : basis_) gens.push_back(map.apply(v));
    return span(map.rows(), gens);
}

Subspace Subspace::preimage(const Matrix& map, const Subspace& target) {
    if (map.rows() != target.ambient_) throw Error("map does not land in the target space");
    if (target.dim() == target.ambient_) return whole(map.cols());
    // Rows of `annihilator` cut out the target: target = {y : annihilator y = 0}.
    const std::vector<Vector> annihilator =
        kernel(Matrix::from_rows(target.basis_, target.ambient_));
    const Matrix condition = Matrix::from_rows(annihilator, target.ambient_) * map;
    return span(map.cols(), kernel(condition));
}

int Subspace::dim_meet_coordinate(const std::vector<int>& coords) const {
    std::vector<bool> inside(ambient_, false);
    for (int c : coords) inside.at(c) = true;
    std::vector<int> outside;
    for (int c = 0; c < ambient_; ++c)
        if (!inside[c]) outside.push_back(c);
    std::vector<Vector> rows;
    rows.reserve(basis_.size());
    for (const auto& v : basis_) {
        Vector r(outside.size());
        for (std::size_t k = 0; k < outside.size(); ++k) r[k] = v[outside[k]];
        rows.push_back(std::move(r));
    }
    const int projected_rank = static_cast<int>(gauss_jordan(rows, static_cast<int>(outside.size())).size());
    return dim() - projected_rank;
}

std::optional<std::vector<int>> Subspace::coordinate_support() const {
    std::vector<int> support;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        for (int c = 0; c < ambient_; ++c) {
            if (c != pivots_[k] && !basis_[k][c].is_zero()) return std::nullopt;
        }
        support.push_back(pivots_[k]);
    }
    return support;
}

std::string to_string(const Vector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + "]";
}

}  // namespace heapcrys
