#include "schur/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schur {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows) {}

Matrix Matrix::identity(std::size_t n, Field f) {
    Matrix m(n, n, f);
    const Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, one);
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::set: index out of range");
    if (v.is_zero()) {
        data_[i].erase(j);
    } else {
        data_[i][j] = v;
    }
}

void Matrix::add_at(std::size_t i, std::size_t j, const Scalar& v) {
    set(i, j, at(i, j) + v);
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at: index out of range");
    auto it = data_[i].find(j);
    return it == data_[i].end() ? Scalar::zero(field_) : it->second;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) {
        throw std::invalid_argument("Matrix::operator*: shape or field mismatch");
    }
    Matrix c(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::map<std::size_t, Scalar>& out = c.data_[i];
        for (const auto& [k, a] : data_[i]) {
            for (const auto& [j, b] : o.data_[k]) {
                auto it = out.find(j);
                if (it == out.end()) {
                    out.emplace(j, a * b);
                } else {
                    it->second += a * b;
                }
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        }
    }
    return c;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) {
        throw std::invalid_argument("Matrix::operator+: shape or field mismatch");
    }
    Matrix c = *this;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, b] : o.data_[i]) c.add_at(i, j, b);
    }
    return c;
}

Matrix Matrix::operator-(const Matrix& o) const {
    return *this + o.scaled(-Scalar::one(field_));
}

Matrix Matrix::scaled(const Scalar& c) const {
    if (c.field() != field_) throw std::invalid_argument("Matrix::scaled: field mismatch");
    Matrix m(rows_, cols_, field_);
    if (c.is_zero()) return m;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[i]) m.data_[i].emplace(j, v * c);
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[i]) t.data_[j].emplace(i, v);
    }
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    return data_ == o.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

std::size_t Matrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool Matrix::is_generalized_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<bool> col_seen(cols_, false);
    const Scalar one = Scalar::one(field_);
    for (const auto& r : data_) {
        if (r.size() != 1) return false;
        const auto& [j, v] = *r.begin();
        if (col_seen[j]) return false;
        col_seen[j] = true;
        if (v != one && v != -one) return false;
    }
    return true;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols_ != bottom.cols_ || top.field_ != bottom.field_) {
        throw std::invalid_argument("Matrix::vstack: shape or field mismatch");
    }
    Matrix m(top.rows_ + bottom.rows_, top.cols_, top.field_);
    for (std::size_t i = 0; i < top.rows_; ++i) m.data_[i] = top.data_[i];
    for (std::size_t i = 0; i < bottom.rows_; ++i) m.data_[top.rows_ + i] = bottom.data_[i];
    return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    if (left.rows_ != right.rows_ || left.field_ != right.field_) {
        throw std::invalid_argument("Matrix::hstack: shape or field mismatch");
    }
    Matrix m(left.rows_, left.cols_ + right.cols_, left.field_);
    for (std::size_t i = 0; i < left.rows_; ++i) {
        m.data_[i] = left.data_[i];
        for (const auto& [j, v] : right.data_[i]) m.data_[i].emplace(left.cols_ + j, v);
    }
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            os << (j ? " " : "") << at(i, j).str();
        }
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Echelon reduced_echelon(const Matrix& m) {
    const Field f = m.field();
    std::vector<std::map<std::size_t, Scalar>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    auto axpy = [](std::map<std::size_t, Scalar>& dst, const Scalar& c,
                   const std::map<std::size_t, Scalar>& src) {
        for (const auto& [j, v] : src) {
            auto it = dst.find(j);
            if (it == dst.end()) {
                dst.emplace(j, c * v);
            } else {
                it->second += c * v;
                if (it->second.is_zero()) dst.erase(it);
            }
        }
    };

    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t i = next_row; i < rows.size(); ++i) {
            auto it = rows[i].begin();
            if (it != rows[i].end() && it->first == col) {
                found = i;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[next_row], rows[found]);

        const Scalar inv = rows[next_row].at(col).inverse();
        if (!inv.is_one()) {
            for (auto& [j, v] : rows[next_row]) v *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next_row) continue;
            auto it = rows[i].find(col);
            if (it != rows[i].end()) axpy(rows[i], -it->second, rows[next_row]);
        }
        pivots.push_back(col);
        ++next_row;
    }

    Matrix out(pivots.size(), m.cols(), f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (const auto& [j, v] : rows[i]) out.set(i, j, v);
    }
    return Echelon{std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return reduced_echelon(m).pivots.size();
}

Subspace Subspace::zero(std::size_t ambient, Field f) {
    return Subspace(Echelon{Matrix(0, ambient, f), {}});
}

Subspace Subspace::full(std::size_t ambient, Field f) {
    Echelon e{Matrix::identity(ambient, f), {}};
    for (std::size_t j = 0; j < ambient; ++j) e.pivots.push_back(j);
    return Subspace(std::move(e));
}

Subspace Subspace::from_rows(const Matrix& spanning_rows) {
    return Subspace(reduced_echelon(spanning_rows));
}

bool Subspace::contains(const std::map<std::size_t, Scalar>& v) const {
    // reduce v against the echelon basis
    std::map<std::size_t, Scalar> w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        auto it = w.find(pivots_[i]);
        if (it == w.end()) continue;
        const Scalar c = it->second;
        for (const auto& [j, bv] : basis_.row(i)) {
            auto wj = w.find(j);
            if (wj == w.end()) {
                w.emplace(j, -(c * bv));
            } else {
                wj->second -= c * bv;
                if (wj->second.is_zero()) w.erase(wj);
            }
        }
    }
    return w.empty();
}

bool Subspace::contains_rows(const Matrix& rows) const {
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        if (!contains(rows.row(i))) return false;
    }
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient_dim() != o.ambient_dim() || field() != o.field()) return false;
    if (dim() != o.dim()) return false;
    return rank(Matrix::vstack(basis_, o.basis_)) == dim();
}

Subspace image(const Matrix& m) {
    return Subspace::from_rows(m.transpose());
}

Subspace kernel(const Matrix& m) {
    Echelon e = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!is_pivot[j]) free_cols.push_back(j);
    }

    Matrix basis(free_cols.size(), m.cols(), m.field());
    const Scalar one = Scalar::one(m.field());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.set(k, fc, one);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            const Scalar c = e.rref.at(i, fc);
            if (!c.is_zero()) basis.set(k, e.pivots[i], -c);
        }
    }
    return Subspace::from_rows(basis);
}

Matrix quotient_map(std::size_t ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim() != ambient_dim) {
        throw std::invalid_argument("quotient_map: ambient dimension mismatch");
    }
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : sub.pivots()) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < ambient_dim; ++j) {
        if (!is_pivot[j]) free_cols.push_back(j);
    }

    // Column e_j maps to the coordinates, on the free columns, of e_j reduced
    // modulo the echelon basis: free columns give unit vectors, pivot column
    // p_i gives minus the free-column part of basis row i.
    Matrix q(free_cols.size(), ambient_dim, sub.field());
    const Scalar one = Scalar::one(sub.field());
    for (std::size_t k = 0; k < free_cols.size(); ++k) q.set(k, free_cols[k], one);
    for (std::size_t i = 0; i < sub.pivots().size(); ++i) {
        for (std::size_t k = 0; k < free_cols.size(); ++k) {
            const Scalar c = sub.basis().at(i, free_cols[k]);
            if (!c.is_zero()) q.set(k, sub.pivots()[i], -c);
        }
    }
    return q;
}

Matrix quotient_section(std::size_t ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim() != ambient_dim) {
        throw std::invalid_argument("quotient_section: ambient dimension mismatch");
    }
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : sub.pivots()) is_pivot[p] = true;

    Matrix s(ambient_dim, ambient_dim - sub.dim(), sub.field());
    const Scalar one = Scalar::one(sub.field());
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_dim; ++j) {
        if (!is_pivot[j]) s.set(j, k++, one);
    }
    return s;
}

}  // namespace schur
