#pragma once

#include <optional>

#include "starsylv/coords.hpp"
#include "starsylv/model.hpp"

namespace starsylv {

// Coordinates for the unknown X (n x m over the system field). Direct mode
// uses row-major entries; Realified mode ((QI, H)) uses (re, im) pairs per
// entry and solves over Q, since X -> A X - X^H B is not QI-linear.
class CoordMap {
public:
    CoordMap(const FieldTag& system_tag, StarMode mode, std::size_t xrows, std::size_t xcols);

    CoordScheme scheme() const { return scheme_; }
    const FieldTag& system_tag() const { return system_tag_; }
    const FieldTag& solve_tag() const { return solve_tag_; }
    std::size_t xrows() const { return xrows_; }
    std::size_t xcols() const { return xcols_; }
    std::size_t dim() const { return xrows_ * xcols_ * entry_width(scheme_); }

    Vec to_coords(const ExactMatrix& x) const;
    ExactMatrix from_coords(const Vec& coords) const;
    // The X whose coordinate vector is the j-th standard basis vector
    // (E_{rc}, or i*E_{rc} for odd realified indices).
    ExactMatrix basis_matrix(std::size_t j) const;

    std::string describe() const;

private:
    FieldTag system_tag_;
    FieldTag solve_tag_;
    CoordScheme scheme_;
    std::size_t xrows_;
    std::size_t xcols_;
};

// One exact linear system capturing all ell equations at once:
// m_op * coords(X) = stacked coords of (A_i X - X^star B_i), rhs = stacked
// coords of C_i. Rows: ell*m^2 (doubled when realified); columns: map.dim().
// Columns are built as images of the coordinate basis matrices; the
// equivalent Kronecker/commutation-matrix assembly is kept in the tests as a
// cross-check of the T modes.
struct AssembledOperator {
    ExactMatrix m_op;
    Vec rhs;
    CoordMap map;
};

AssembledOperator assemble(const StarSylvesterSystem& sys);

// Consistent iff solution is engaged; otherwise the ranks are the evidence
// (rank_augmented = rank + 1). dim is over the solve field (the Q-dimension
// of the realified space in (QI, H) mode).
struct Verdict {
    std::optional<SolutionSet> solution;
    std::size_t rank = 0;
    std::size_t rank_augmented = 0;
    bool consistent() const { return solution.has_value(); }
};

Verdict solve(const StarSylvesterSystem& sys);

// |solution set| = p^dim for a consistent GF(p) system.
mpz_class solution_count_gf(const StarSylvesterSystem& sys, const SolutionSet& sol);

}  // namespace starsylv
