#include "starsylv/vecsolve.hpp"

namespace starsylv {

CoordMap::CoordMap(const FieldTag& system_tag, StarMode mode, std::size_t xrows, std::size_t xcols)
    : system_tag_(system_tag),
      solve_tag_(solve_tag_for(system_tag, scheme_for(system_tag, mode))),
      scheme_(scheme_for(system_tag, mode)),
      xrows_(xrows),
      xcols_(xcols) {}

Vec CoordMap::to_coords(const ExactMatrix& x) const {
    if (x.rows() != xrows_ || x.cols() != xcols_ || x.tag() != system_tag_)
        throw ShapeMismatch("coordinate map expects " + std::to_string(xrows_) + "x" +
                            std::to_string(xcols_) + " over " + system_tag_.name());
    Vec out;
    out.reserve(dim());
    append_matrix_coords(out, x, scheme_);
    return out;
}

ExactMatrix CoordMap::from_coords(const Vec& coords) const {
    if (coords.size() != dim()) throw ShapeMismatch("coordinate vector has the wrong length");
    std::size_t offset = 0;
    return matrix_from_coords(system_tag_, scheme_, xrows_, xcols_, coords, offset);
}

ExactMatrix CoordMap::basis_matrix(std::size_t j) const {
    if (j >= dim()) throw IndexOutOfRange("coordinate index " + std::to_string(j));
    ExactMatrix x(system_tag_, xrows_, xcols_);
    std::size_t w = entry_width(scheme_);
    std::size_t entry = j / w;
    std::size_t r = entry / xcols_, c = entry % xcols_;
    if (scheme_ == CoordScheme::Direct) {
        x.at(r, c) = Scalar::one(system_tag_);
    } else {
        x.at(r, c) = j % w == 0 ? Scalar::gaussian(1, 0) : Scalar::gaussian(0, 1);
    }
    return x;
}

std::string CoordMap::describe() const {
    if (scheme_ == CoordScheme::Direct)
        return std::to_string(dim()) + " coordinates: row-major entries of X over " + system_tag_.name();
    return std::to_string(dim()) + " coordinates: (re, im) per row-major entry of X, solved over Q";
}

namespace {

// Stacked coordinates of the homogeneous images A_i X - X^star B_i.
Vec operator_image(const StarSylvesterSystem& sys, const ExactMatrix& x, CoordScheme scheme) {
    ExactMatrix xs = star(x, sys.mode());
    std::vector<ExactMatrix> images;
    images.reserve(sys.ell());
    for (const SystemTriple& t : sys.triples()) images.push_back(t.a * x - xs * t.b);
    return stacked_coords(images, scheme);
}

}  // namespace

AssembledOperator assemble(const StarSylvesterSystem& sys) {
    CoordMap map(sys.tag(), sys.mode(), sys.n(), sys.m());
    std::size_t rows = sys.ell() * sys.m() * sys.m() * entry_width(map.scheme());
    ExactMatrix m_op(map.solve_tag(), rows, map.dim());
    for (std::size_t j = 0; j < map.dim(); ++j) {
        Vec col = operator_image(sys, map.basis_matrix(j), map.scheme());
        for (std::size_t r = 0; r < rows; ++r)
            if (!col[r].is_zero()) m_op.at(r, j) = col[r];
    }
    std::vector<ExactMatrix> cs;
    cs.reserve(sys.ell());
    for (const SystemTriple& t : sys.triples()) cs.push_back(t.c);
    return AssembledOperator{std::move(m_op), stacked_coords(cs, map.scheme()), std::move(map)};
}

Verdict solve(const StarSylvesterSystem& sys) {
    AssembledOperator op = assemble(sys);
    AffineSolveResult res = solve_affine(op.m_op, op.rhs);
    Verdict verdict;
    verdict.rank = res.rank;
    verdict.rank_augmented = res.rank_augmented;
    if (!res.consistent()) return verdict;
    SolutionSet sol{op.map.from_coords(*res.particular), {}, res.nullspace_basis.size()};
    sol.homogeneous_basis.reserve(res.nullspace_basis.size());
    for (const Vec& v : res.nullspace_basis) sol.homogeneous_basis.push_back(op.map.from_coords(v));
    verdict.solution = std::move(sol);
    return verdict;
}

mpz_class solution_count_gf(const StarSylvesterSystem& sys, const SolutionSet& sol) {
    if (sys.tag().kind() != FieldKind::PrimeField)
        throw FieldMismatch("solution counting requires a GF(p) system");
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(sys.tag().modulus()),
                  static_cast<unsigned long>(sol.dim));
    return count;
}

}  // namespace starsylv
