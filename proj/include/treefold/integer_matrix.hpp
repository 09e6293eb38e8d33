#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace treefold {

/// Dense int64 matrix. Arithmetic is overflow-checked and throws Error(Budget).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols = -1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<std::vector<std::int64_t>> to_rows() const;
    IntMatrix transposed() const;
    IntMatrix block(int r0, int c0, int nr, int nc) const;
    bool is_zero() const;
    std::string str() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> data_;
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Determinant by fraction-free elimination.
std::int64_t determinant(const IntMatrix& m);

/// U * M * V = D with D diagonal, d_1 | d_2 | ..., all d_i >= 0, and U, V unimodular.
/// The inverses are tracked alongside so nothing has to be inverted afterwards.
struct SmithForm {
    IntMatrix U, D, V, U_inv, V_inv;
    std::vector<std::int64_t> diagonal;  ///< min(rows, cols) entries
    int rank = 0;
};

struct SmithOptions {
    bool left = true;   ///< compute U and U_inv
    bool right = true;  ///< compute V and V_inv
};

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options = {});

/// The subgroup of Z^n spanned by some integer vectors, with a basis in which
/// membership and coordinates are exact.
class Lattice {
public:
    Lattice() = default;
    /// Columns of `generators` span the lattice.
    explicit Lattice(const IntMatrix& generators);

    int ambient_dim() const { return ambient_; }
    int rank() const { return static_cast<int>(diag_.size()); }
    IntMatrix basis() const;  ///< ambient x rank
    /// Coordinates of x in basis(), or nothing if x is not in the lattice.
    std::optional<std::vector<std::int64_t>> coordinates(const std::vector<std::int64_t>& x) const;
    bool contains(const Lattice& other) const;
    /// [this : other] for a sublattice of the same rank; nothing otherwise.
    std::optional<std::int64_t> index_of(const Lattice& other) const;
    friend bool operator==(const Lattice& a, const Lattice& b) { return a.contains(b) && b.contains(a); }

private:
    int ambient_ = 0;
    IntMatrix U_, U_inv_;
    std::vector<std::int64_t> diag_;  // non-zero invariant factors
};

}  // namespace treefold
