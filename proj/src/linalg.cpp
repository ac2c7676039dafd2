#include "axcheck/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace axc {

Vec Vec::unit(const FieldSpec& f, std::size_t n, std::size_t k) {
    Vec v(f, n);
    v[k] = Scalar::one(f);
    return v;
}

bool Vec::is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

Vec Vec::operator-() const {
    Vec v = *this;
    for (auto& s : v.c_) s = -s;
    return v;
}

Vec& Vec::operator+=(const Vec& o) {
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
    for (auto& e : c_) e *= s;
    return *this;
}

std::string Vec::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? ", " : "") << c_[i].str();
    os << ")";
    return os.str();
}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                         std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec Matrix::row(std::size_t i) const {
    std::vector<Scalar> c(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    return Vec(field_, std::move(c));
}

Vec Matrix::col(std::size_t j) const {
    Vec v(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.dim() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vec& v) {
    if (v.dim() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    Vec y(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = Scalar::zero(field_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !x[j].is_zero()) acc += at(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum size mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference size mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& e : r.e_) e *= s;
    return r;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("vstack column mismatch");
    Matrix r(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) r.set_row(i, top.row(i));
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        r.set_row(top.rows() + i, bottom.row(i));
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
        os << "\n";
    }
    return os.str();
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (!m.at(i, c).is_zero()) { sel = i; break; }
        }
        if (sel == m.rows()) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(r, j));
        }
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::pair<Matrix, std::vector<std::size_t>> rref(Matrix m) {
    auto pivots = rref_in_place(m);
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    Matrix c = m;
    return rref_in_place(c).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
    return from_rref(Matrix::identity(f, ambient), ambient);
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient,
                        const std::vector<Vec>& vectors) {
    Matrix m = Matrix::from_rows(f, vectors, ambient);
    auto pivots = rref_in_place(m);
    Matrix basis(f, pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.set_row(i, m.row(i));
    return from_rref(std::move(basis), ambient);
}

Subspace Subspace::from_rref(Matrix rref_basis, std::size_t ambient) {
    Subspace s;
    s.field_ = rref_basis.field();
    s.ambient_ = ambient;
    s.basis_ = std::move(rref_basis);
    return s;
}

bool Subspace::contains(const Vec& x) const {
    return coordinates_of(x).has_value();
}

std::optional<Vec> Subspace::coordinates_of(const Vec& x) const {
    if (x.dim() != ambient_) throw std::invalid_argument("ambient mismatch");
    // Reduce x by the RREF rows; remainder zero iff contained.
    Vec rem = x;
    Vec coef(field_, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        // pivot column of row i = first nonzero entry
        std::size_t pc = 0;
        while (pc < ambient_ && basis_.at(i, pc).is_zero()) ++pc;
        if (pc == ambient_) continue;
        if (rem[pc].is_zero()) continue;
        Scalar c = rem[pc];  // pivot is 1
        coef[i] = c;
        for (std::size_t j = pc; j < ambient_; ++j)
            rem[j] -= c * basis_.at(i, j);
    }
    if (!rem.is_zero()) return std::nullopt;
    return coef;
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < dim(); ++i)
        os << (i ? ", " : "") << basis_.row(i).str();
    os << "} in dim " << ambient_;
    return os.str();
}

Subspace kernel(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec v(m.field(), n);
        v[j] = Scalar::one(m.field());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(i, j);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.field(), n, basis);
}

Subspace eigenspace(const Matrix& m, const Scalar& lambda) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eigenspace of a non-square matrix");
    Matrix shifted = m - Matrix::identity(m.field(), m.rows()).scaled(lambda);
    return kernel(shifted);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient())
        throw std::invalid_argument("subspace ambient mismatch");
    Matrix stacked = Matrix::vstack(u.basis(), v.basis());
    std::vector<Vec> rows;
    rows.reserve(stacked.rows());
    for (std::size_t i = 0; i < stacked.rows(); ++i) rows.push_back(stacked.row(i));
    return Subspace::span(u.field(), u.ambient(), rows);
}

Subspace annihilator(const Subspace& u) {
    return kernel(u.basis());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient())
        throw std::invalid_argument("subspace ambient mismatch");
    // (U^perp + V^perp)^perp with respect to the coordinate pairing
    return annihilator(subspace_sum(annihilator(u), annihilator(v)));
}

bool is_direct_sum(const std::vector<Subspace>& parts, std::size_t ambient) {
    if (parts.empty()) return ambient == 0;
    std::size_t total = 0;
    Subspace acc = Subspace::zero(parts.front().field(), ambient);
    for (const auto& p : parts) {
        if (p.ambient() != ambient)
            throw std::invalid_argument("subspace ambient mismatch");
        total += p.dim();
        acc = subspace_sum(acc, p);
    }
    return total == ambient && acc.dim() == ambient;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.dim() != a.rows()) throw std::invalid_argument("solve size mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec x(a.field(), a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

}  // namespace axc
