#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starsylv/field.hpp"

namespace starsylv {

using Vec = std::vector<Scalar>;

// Dense matrix over a single field, row-major. Empty dimensions are legal;
// degenerate block operations depend on them.
class ExactMatrix {
public:
    ExactMatrix(const FieldTag& tag, std::size_t rows, std::size_t cols);

    static ExactMatrix zeros(const FieldTag& tag, std::size_t rows, std::size_t cols);
    static ExactMatrix identity(const FieldTag& tag, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldTag& tag() const { return tag_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    bool is_zero() const;

    ExactMatrix operator-() const;
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const Scalar& s, const ExactMatrix& m);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    // Row-major entry stack; the vec convention used throughout.
    Vec to_vec() const;
    static ExactMatrix from_vec(const FieldTag& tag, std::size_t rows, std::size_t cols, const Vec& v);

private:
    FieldTag tag_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

enum class StarMode { Transpose, ConjugateTranspose };

// Conjugate transpose aliases plain transpose over fields with the trivial
// involution; requesting it there is rejected rather than silently aliased.
ExactMatrix star(const ExactMatrix& m, StarMode mode);

struct RrefResult {
    ExactMatrix r;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

// Unique reduced row echelon form, exact Gauss-Jordan.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// Basis of {v : M v = 0}, the standard RREF free-column construction
// (deterministic: one vector per free column, in column order).
std::vector<Vec> nullspace(const ExactMatrix& m);

// Full solution set of M x = b. Inconsistency is a value: solution is empty
// and the ranks carry the evidence (rank_augmented = rank + 1).
struct AffineSolveResult {
    std::optional<Vec> particular;
    std::vector<Vec> nullspace_basis;
    std::size_t rank;
    std::size_t rank_augmented;
    bool consistent() const { return particular.has_value(); }
};

AffineSolveResult solve_affine(const ExactMatrix& m, const Vec& b);

// Exact inverse, or nullopt when singular. Throws NotSquare.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

// 2x2 block composition [[b11, b12], [b21, b22]]; blocks must be conformal.
ExactMatrix block_compose(const ExactMatrix& b11, const ExactMatrix& b12,
                          const ExactMatrix& b21, const ExactMatrix& b22);

struct Blocks2x2 {
    ExactMatrix b11, b12, b21, b22;
};

Blocks2x2 block_extract(const ExactMatrix& m, std::size_t row_split, std::size_t col_split);

// Matrix text format: header "matrix <rows> <cols>", then one line per row of
// whitespace-separated scalar literals.
std::string serialize_matrix(const ExactMatrix& m);
ExactMatrix parse_matrix(const FieldTag& tag, std::string_view text);

// Helpers used across modules.
Vec matvec(const ExactMatrix& m, const Vec& x);
ExactMatrix hstack(const ExactMatrix& left, const ExactMatrix& right);
ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);

}  // namespace starsylv
