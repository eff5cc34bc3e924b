#pragma once

#include "starsylv/exactmat.hpp"

namespace starsylv {

// How matrix unknowns become coordinate vectors for the one linear solve.
// Direct: one coordinate per entry, over the system field. Realified: the
// (QI, H) case only — the maps involved are conjugate-semilinear, hence only
// Q-linear, so every complex entry contributes two rational coordinates
// (real part, then imaginary part) and the solve runs over Q.
enum class CoordScheme { Direct, Realified };

inline CoordScheme scheme_for(const FieldTag& tag, StarMode mode) {
    return mode == StarMode::ConjugateTranspose && tag.has_conjugation() ? CoordScheme::Realified
                                                                         : CoordScheme::Direct;
}

inline std::size_t entry_width(CoordScheme scheme) {
    return scheme == CoordScheme::Realified ? 2 : 1;
}

inline FieldTag solve_tag_for(const FieldTag& tag, CoordScheme scheme) {
    return scheme == CoordScheme::Realified ? FieldTag::rationals() : tag;
}

inline void append_entry_coords(Vec& out, const Scalar& s, CoordScheme scheme) {
    if (scheme == CoordScheme::Direct) {
        out.push_back(s);
    } else {
        out.push_back(Scalar::rational(s.re()));
        out.push_back(Scalar::rational(s.im()));
    }
}

inline Scalar entry_from_coords(CoordScheme scheme, const Vec& coords, std::size_t index) {
    if (scheme == CoordScheme::Direct) return coords[index];
    return Scalar::gaussian(coords[index].re(), coords[index + 1].re());
}

// Row-major entry coordinates of a whole matrix, appended to out.
inline void append_matrix_coords(Vec& out, const ExactMatrix& m, CoordScheme scheme) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) append_entry_coords(out, m.at(r, c), scheme);
}

// Concatenated coordinates of a list of matrices (the row stacker shared by
// the vectorized solver and the pair-space engine).
inline Vec stacked_coords(const std::vector<ExactMatrix>& mats, CoordScheme scheme) {
    Vec out;
    std::size_t total = 0;
    for (const ExactMatrix& m : mats) total += m.rows() * m.cols();
    out.reserve(total * entry_width(scheme));
    for (const ExactMatrix& m : mats) append_matrix_coords(out, m, scheme);
    return out;
}

// Inverse of append_matrix_coords: reads rows*cols entries starting at
// coords[offset], advancing offset.
inline ExactMatrix matrix_from_coords(const FieldTag& system_tag, CoordScheme scheme,
                                      std::size_t rows, std::size_t cols, const Vec& coords,
                                      std::size_t& offset) {
    ExactMatrix m(system_tag, rows, cols);
    std::size_t w = entry_width(scheme);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            m.at(r, c) = entry_from_coords(scheme, coords, offset);
            offset += w;
        }
    return m;
}

}  // namespace starsylv
