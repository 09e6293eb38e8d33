#include "treefold/integer_matrix.hpp"

#include "treefold/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace treefold {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Budget, "integer overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Budget, "integer overflow");
    return r;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw Error(ErrorKind::Input, "negative matrix shape");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols) {
    if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw Error(ErrorKind::Input, "ragged matrix rows");
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::Internal, "block out of range");
    IntMatrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::Internal, "matrix shape mismatch in product");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const std::int64_t x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
        }
    return c;
}

std::int64_t determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::Input, "determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    // Bareiss elimination; every intermediate is a minor, so exact division is safe.
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    __int128 prev = 1;
    int sign = 1;
    const __int128 limit = static_cast<__int128>(1) << 100;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 v = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                if (v > limit || v < -limit) throw Error(ErrorKind::Budget, "integer overflow");
                a[i][j] = v;
            }
        prev = a[k][k];
    }
    __int128 d = sign * a[n - 1][n - 1];
    if (d > INT64_MAX || d < INT64_MIN) throw Error(ErrorKind::Budget, "integer overflow");
    return static_cast<std::int64_t>(d);
}

namespace {

// Elementary operations applied to D while keeping U, U_inv, V, V_inv in step.
struct SmithWork {
    IntMatrix& D;
    IntMatrix* U;
    IntMatrix* U_inv;
    IntMatrix* V;
    IntMatrix* V_inv;

    // row_i += q * row_j
    void add_row(int i, int j, std::int64_t q) {
        if (q == 0) return;
        for (int c = 0; c < D.cols(); ++c)
            if (D(j, c)) D(i, c) = checked_add(D(i, c), checked_mul(q, D(j, c)));
        if (U)
            for (int c = 0; c < U->cols(); ++c)
                if ((*U)(j, c)) (*U)(i, c) = checked_add((*U)(i, c), checked_mul(q, (*U)(j, c)));
        if (U_inv)
            for (int r = 0; r < U_inv->rows(); ++r)
                if ((*U_inv)(r, i)) (*U_inv)(r, j) = checked_add((*U_inv)(r, j), checked_mul(-q, (*U_inv)(r, i)));
    }
    // col_i += q * col_j
    void add_col(int i, int j, std::int64_t q) {
        if (q == 0) return;
        for (int r = 0; r < D.rows(); ++r)
            if (D(r, j)) D(r, i) = checked_add(D(r, i), checked_mul(q, D(r, j)));
        if (V)
            for (int r = 0; r < V->rows(); ++r)
                if ((*V)(r, j)) (*V)(r, i) = checked_add((*V)(r, i), checked_mul(q, (*V)(r, j)));
        if (V_inv)
            for (int c = 0; c < V_inv->cols(); ++c)
                if ((*V_inv)(i, c)) (*V_inv)(j, c) = checked_add((*V_inv)(j, c), checked_mul(-q, (*V_inv)(i, c)));
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < D.cols(); ++c) std::swap(D(i, c), D(j, c));
        if (U)
            for (int c = 0; c < U->cols(); ++c) std::swap((*U)(i, c), (*U)(j, c));
        if (U_inv)
            for (int r = 0; r < U_inv->rows(); ++r) std::swap((*U_inv)(r, i), (*U_inv)(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
        if (V)
            for (int r = 0; r < V->rows(); ++r) std::swap((*V)(r, i), (*V)(r, j));
        if (V_inv)
            for (int c = 0; c < V_inv->cols(); ++c) std::swap((*V_inv)(i, c), (*V_inv)(j, c));
    }
    void negate_row(int i) {
        for (int c = 0; c < D.cols(); ++c) D(i, c) = -D(i, c);
        if (U)
            for (int c = 0; c < U->cols(); ++c) (*U)(i, c) = -(*U)(i, c);
        if (U_inv)
            for (int r = 0; r < U_inv->rows(); ++r) (*U_inv)(r, i) = -(*U_inv)(r, i);
    }
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options) {
    SmithForm f;
    f.D = m;
    const int R = m.rows(), C = m.cols();
    if (options.left) {
        f.U = IntMatrix::identity(R);
        f.U_inv = IntMatrix::identity(R);
    }
    if (options.right) {
        f.V = IntMatrix::identity(C);
        f.V_inv = IntMatrix::identity(C);
    }
    SmithWork w{f.D, options.left ? &f.U : nullptr, options.left ? &f.U_inv : nullptr,
                options.right ? &f.V : nullptr, options.right ? &f.V_inv : nullptr};
    IntMatrix& D = f.D;

    int t = 0;
    for (; t < std::min(R, C); ++t) {
        // Pivot: smallest non-zero absolute value in the remaining block.
        int pr = -1, pc = -1;
        std::int64_t best = 0;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (D(i, j) != 0 && (pr < 0 || std::llabs(D(i, j)) < best)) {
                    best = std::llabs(D(i, j));
                    pr = i;
                    pc = j;
                    if (best == 1) goto found;
                }
    found:
        if (pr < 0) break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        while (true) {
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (D(i, t) == 0) continue;
                w.add_row(i, t, -floor_div(D(i, t), D(t, t)));
                if (D(i, t) != 0) {
                    clean = false;
                    w.swap_rows(t, i);
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (D(t, j) == 0) continue;
                w.add_col(j, t, -floor_div(D(t, j), D(t, t)));
                if (D(t, j) != 0) {
                    clean = false;
                    w.swap_cols(t, j);
                }
            }
            if (!clean) continue;
            // Divisibility: fold in any entry the pivot does not divide.
            int bad_row = -1;
            for (int i = t + 1; i < R && bad_row < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row < 0) break;
            w.add_row(t, bad_row, 1);
        }
        if (D(t, t) < 0) w.negate_row(t);
    }
    f.diagonal.assign(std::min(R, C), 0);
    for (int i = 0; i < std::min(R, C); ++i) f.diagonal[i] = D(i, i);
    f.rank = 0;
    while (f.rank < static_cast<int>(f.diagonal.size()) && f.diagonal[f.rank] != 0) ++f.rank;
    return f;
}

Lattice::Lattice(const IntMatrix& generators) : ambient_(generators.rows()) {
    SmithForm f = smith_normal_form(generators, {true, false});
    U_ = std::move(f.U);
    U_inv_ = std::move(f.U_inv);
    diag_.assign(f.diagonal.begin(), f.diagonal.begin() + f.rank);
}

IntMatrix Lattice::basis() const {
    IntMatrix b(ambient_, rank());
    for (int j = 0; j < rank(); ++j)
        for (int i = 0; i < ambient_; ++i) b(i, j) = checked_mul(U_inv_(i, j), diag_[j]);
    return b;
}

std::optional<std::vector<std::int64_t>> Lattice::coordinates(const std::vector<std::int64_t>& x) const {
    if (static_cast<int>(x.size()) != ambient_) throw Error(ErrorKind::Internal, "vector has the wrong length");
    std::vector<std::int64_t> y(ambient_, 0);
    for (int i = 0; i < ambient_; ++i)
        for (int j = 0; j < ambient_; ++j)
            if (U_(i, j) && x[j]) y[i] = checked_add(y[i], checked_mul(U_(i, j), x[j]));
    std::vector<std::int64_t> c(rank());
    for (int i = 0; i < ambient_; ++i) {
        if (i < rank()) {
            if (y[i] % diag_[i] != 0) return std::nullopt;
            c[i] = y[i] / diag_[i];
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return c;
}

bool Lattice::contains(const Lattice& other) const {
    if (other.ambient_ != ambient_) return false;
    IntMatrix b = other.basis();
    for (int j = 0; j < b.cols(); ++j) {
        std::vector<std::int64_t> x(ambient_);
        for (int i = 0; i < ambient_; ++i) x[i] = b(i, j);
        if (!coordinates(x)) return false;
    }
    return true;
}

std::optional<std::int64_t> Lattice::index_of(const Lattice& other) const {
    if (other.rank() != rank() || !contains(other)) return std::nullopt;
    IntMatrix b = other.basis();
    IntMatrix coords(rank(), rank());
    for (int j = 0; j < rank(); ++j) {
        std::vector<std::int64_t> x(ambient_);
        for (int i = 0; i < ambient_; ++i) x[i] = b(i, j);
        auto c = *coordinates(x);
        for (int i = 0; i < rank(); ++i) coords(i, j) = c[i];
    }
    return std::llabs(determinant(coords));
}

}  // namespace treefold
