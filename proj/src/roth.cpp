#include "starsylv/roth.hpp"

namespace starsylv {

ExactMatrix block_m(const StarSylvesterSystem& sys, std::size_t i) {
    const SystemTriple& t = sys.triple(i);
    return block_compose(t.c, -t.a, t.b, ExactMatrix::zeros(sys.tag(), sys.n(), sys.n()));
}

ExactMatrix block_n(const StarSylvesterSystem& sys, std::size_t i) {
    const SystemTriple& t = sys.triple(i);
    return block_compose(ExactMatrix::zeros(sys.tag(), sys.m(), sys.m()), -t.a, t.b,
                         ExactMatrix::zeros(sys.tag(), sys.n(), sys.n()));
}

CongruenceWitness verify_congruence(const StarSylvesterSystem& sys, const ExactMatrix& s) {
    std::size_t d = sys.m() + sys.n();
    if (s.tag() != sys.tag()) throw FieldMismatch("witness field differs from system");
    if (s.rows() != d || s.cols() != d)
        throw ShapeMismatch("witness must be " + std::to_string(d) + "x" + std::to_string(d));
    CongruenceWitness w{s, inverse(s).has_value(), {}};
    ExactMatrix s_star = star(s, sys.mode());
    w.per_equation_ok.reserve(sys.ell());
    for (std::size_t i = 0; i < sys.ell(); ++i)
        w.per_equation_ok.push_back(s * block_m(sys, i) * s_star == block_n(sys, i));
    return w;
}

CongruenceWitness witness_from_solution(const StarSylvesterSystem& sys, const ExactMatrix& x) {
    if (!is_solution(sys, x)) throw NotASolution("candidate X does not solve the system");
    ExactMatrix s = block_compose(ExactMatrix::identity(sys.tag(), sys.m()), star(x, sys.mode()),
                                  ExactMatrix::zeros(sys.tag(), sys.n(), sys.m()),
                                  ExactMatrix::identity(sys.tag(), sys.n()));
    return verify_congruence(sys, s);
}

PairVector::PairVector(ExactMatrix u, ExactMatrix w, std::size_t m, std::size_t n)
    : u_(std::move(u)), w_(std::move(w)), m_(m), n_(n) {
    std::size_t d = m_ + n_;
    if (u_.rows() != d || u_.cols() != d || w_.rows() != d || w_.cols() != d)
        throw ShapeMismatch("pair matrices must be " + std::to_string(d) + "x" + std::to_string(d));
    if (u_.tag() != w_.tag()) throw FieldMismatch("pair matrices over different fields");
}

ExactMatrix PairVector::slice_u(int which) const {
    Blocks2x2 b = block_extract(u_, m_, m_);
    switch (which) {
        case 0: return b.b11;
        case 1: return b.b12;
        case 2: return b.b21;
        default: return b.b22;
    }
}

ExactMatrix PairVector::slice_w(int which) const {
    Blocks2x2 b = block_extract(w_, m_, m_);
    switch (which) {
        case 0: return b.b11;
        case 1: return b.b12;
        case 2: return b.b21;
        default: return b.b22;
    }
}

ExactMatrix project_phi(const PairVector& p) {
    return vstack(p.w11(), p.w21());
}

namespace {

// Precomputed blocks for one family of constraints. The defining equations
//   Gamma_i: N_i U + W M_i = 0
//   Delta_i: U^star N_i + M_i W^star = 0
// are evaluated as whole (m+n)x(m+n) matrices; their blocks are exactly the
// eight block equations of the partitioned form.
struct ConstraintContext {
    std::vector<ExactMatrix> ms;
    std::vector<ExactMatrix> ns;
    StarMode mode;
    CoordScheme scheme;
    FieldTag tag;
    std::size_t m, n;

    ConstraintContext(const StarSylvesterSystem& sys, bool homogeneous)
        : mode(sys.mode()),
          scheme(scheme_for(sys.tag(), sys.mode())),
          tag(sys.tag()),
          m(sys.m()),
          n(sys.n()) {
        ms.reserve(sys.ell());
        ns.reserve(sys.ell());
        for (std::size_t i = 0; i < sys.ell(); ++i) {
            ns.push_back(block_n(sys, i));
            ms.push_back(homogeneous ? ns.back() : block_m(sys, i));
        }
    }

    std::size_t d() const { return m + n; }
    std::size_t ell() const { return ms.size(); }

    // Stacked coordinates of all 2*ell constraint matrices at (U, W).
    Vec evaluate(const ExactMatrix& u, const ExactMatrix& w) const {
        ExactMatrix u_star = star(u, mode);
        ExactMatrix w_star = star(w, mode);
        std::vector<ExactMatrix> images;
        images.reserve(2 * ell());
        for (std::size_t i = 0; i < ell(); ++i) {
            images.push_back(ns[i] * u + w * ms[i]);
            images.push_back(u_star * ns[i] + ms[i] * w_star);
        }
        return stacked_coords(images, scheme);
    }

    std::size_t row_count() const { return 2 * ell() * d() * d() * entry_width(scheme); }

    // Single-space variants for the Gamma/Delta selectors.
    Vec evaluate_one(const ExactMatrix& u, const ExactMatrix& w, PairSpaceKind kind,
                     std::size_t i) const {
        if (kind == PairSpaceKind::Gamma) return stacked_coords({ns[i] * u + w * ms[i]}, scheme);
        return stacked_coords({star(u, mode) * ns[i] + ms[i] * star(w, mode)}, scheme);
    }
};

// Coordinates for pairs (U, W). Full layout: all entries of U then all of W,
// row-major. Pinned layout: W11 and W21 (the phi blocks) are external
// constants and only U, W12, W22 carry coordinates.
struct PairLayout {
    FieldTag tag;
    CoordScheme scheme;
    std::size_t m, n;
    bool pinned;

    std::size_t d() const { return m + n; }
    std::size_t w() const { return entry_width(scheme); }
    std::size_t dim() const {
        std::size_t free_w = pinned ? m * n + n * n : d() * d();
        return (d() * d() + free_w) * w();
    }

    PairVector from_coords(const Vec& coords, const ExactMatrix& w11, const ExactMatrix& w21) const {
        std::size_t offset = 0;
        ExactMatrix u = matrix_from_coords(tag, scheme, d(), d(), coords, offset);
        if (!pinned) {
            ExactMatrix w_full = matrix_from_coords(tag, scheme, d(), d(), coords, offset);
            return PairVector(std::move(u), std::move(w_full), m, n);
        }
        ExactMatrix w12 = matrix_from_coords(tag, scheme, m, n, coords, offset);
        ExactMatrix w22 = matrix_from_coords(tag, scheme, n, n, coords, offset);
        return PairVector(std::move(u), block_compose(w11, w12, w21, w22), m, n);
    }

    PairVector from_coords(const Vec& coords) const {
        return from_coords(coords, ExactMatrix::zeros(tag, m, m), ExactMatrix::zeros(tag, n, m));
    }

    Vec to_coords(const PairVector& p) const {
        Vec out;
        out.reserve(dim());
        append_matrix_coords(out, p.u(), scheme);
        if (!pinned) {
            append_matrix_coords(out, p.w(), scheme);
        } else {
            append_matrix_coords(out, p.w12(), scheme);
            append_matrix_coords(out, p.w22(), scheme);
        }
        return out;
    }

    Vec unit(std::size_t j) const {
        FieldTag solve = solve_tag_for(tag, scheme);
        Vec coords(dim(), Scalar::zero(solve));
        coords[j] = Scalar::one(solve);
        return coords;
    }
};

PairLayout layout_for(const StarSylvesterSystem& sys, bool pinned) {
    return PairLayout{sys.tag(), scheme_for(sys.tag(), sys.mode()), sys.m(), sys.n(), pinned};
}

// Operator matrix of the constraints over a pair layout, with the pinned
// blocks held at zero (the linear part).
ExactMatrix constraint_operator(const ConstraintContext& ctx, const PairLayout& layout) {
    ExactMatrix op(solve_tag_for(layout.tag, layout.scheme), ctx.row_count(), layout.dim());
    for (std::size_t j = 0; j < layout.dim(); ++j) {
        PairVector p = layout.from_coords(layout.unit(j));
        Vec col = ctx.evaluate(p.u(), p.w());
        for (std::size_t r = 0; r < col.size(); ++r)
            if (!col[r].is_zero()) op.at(r, j) = col[r];
    }
    return op;
}

}  // namespace

PairSpaceBasis pair_space(const StarSylvesterSystem& sys, bool homogeneous) {
    ConstraintContext ctx(sys, homogeneous);
    PairLayout layout = layout_for(sys, false);
    std::vector<Vec> kernel = nullspace(constraint_operator(ctx, layout));
    PairSpaceBasis out{PairSpaceKind::D, homogeneous, std::nullopt, {}, kernel.size(),
                       layout.scheme == CoordScheme::Realified};
    out.basis.reserve(kernel.size());
    for (const Vec& v : kernel) out.basis.push_back(layout.from_coords(v));
    return out;
}

PairSpaceBasis pair_space_component(const StarSylvesterSystem& sys, PairSpaceKind kind,
                                    std::size_t eq_index, bool homogeneous) {
    if (kind == PairSpaceKind::D) return pair_space(sys, homogeneous);
    if (eq_index >= sys.ell()) throw IndexOutOfRange("equation index " + std::to_string(eq_index));
    ConstraintContext ctx(sys, homogeneous);
    PairLayout layout = layout_for(sys, false);
    ExactMatrix op(solve_tag_for(layout.tag, layout.scheme),
                   layout.d() * layout.d() * entry_width(layout.scheme), layout.dim());
    for (std::size_t j = 0; j < layout.dim(); ++j) {
        PairVector p = layout.from_coords(layout.unit(j));
        Vec col = ctx.evaluate_one(p.u(), p.w(), kind, eq_index);
        for (std::size_t r = 0; r < col.size(); ++r)
            if (!col[r].is_zero()) op.at(r, j) = col[r];
    }
    std::vector<Vec> kernel = nullspace(op);
    PairSpaceBasis out{kind, homogeneous, eq_index, {}, kernel.size(),
                       layout.scheme == CoordScheme::Realified};
    out.basis.reserve(kernel.size());
    for (const Vec& v : kernel) out.basis.push_back(layout.from_coords(v));
    return out;
}

bool pair_satisfies(const StarSylvesterSystem& sys, const PairVector& p, PairSpaceKind kind,
                    bool homogeneous, std::optional<std::size_t> eq_index) {
    ConstraintContext ctx(sys, homogeneous);
    auto all_zero = [](const Vec& v) {
        for (const Scalar& s : v)
            if (!s.is_zero()) return false;
        return true;
    };
    if (kind == PairSpaceKind::D) return all_zero(ctx.evaluate(p.u(), p.w()));
    if (eq_index) return all_zero(ctx.evaluate_one(p.u(), p.w(), kind, *eq_index));
    for (std::size_t i = 0; i < sys.ell(); ++i)
        if (!all_zero(ctx.evaluate_one(p.u(), p.w(), kind, i))) return false;
    return true;
}

namespace {

// Kernel of phi restricted to D (or D_0): pairs satisfying the constraints
// with W11 = 0 and W21 = 0, i.e. the nullspace over the pinned layout.
std::vector<PairVector> phi_kernel_basis(const StarSylvesterSystem& sys, bool homogeneous) {
    ConstraintContext ctx(sys, homogeneous);
    PairLayout layout = layout_for(sys, true);
    std::vector<Vec> kernel = nullspace(constraint_operator(ctx, layout));
    std::vector<PairVector> out;
    out.reserve(kernel.size());
    for (const Vec& v : kernel) out.push_back(layout.from_coords(v));
    return out;
}

// Dimension of span{phi(p) : p in basis} over the solve field.
std::size_t phi_image_dim(const std::vector<PairVector>& basis, const StarSylvesterSystem& sys) {
    CoordScheme scheme = scheme_for(sys.tag(), sys.mode());
    std::size_t cols = (sys.m() + sys.n()) * sys.m() * entry_width(scheme);
    ExactMatrix rows(solve_tag_for(sys.tag(), scheme), basis.size(), cols);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Vec coords = stacked_coords({project_phi(basis[i])}, scheme);
        for (std::size_t j = 0; j < cols; ++j)
            if (!coords[j].is_zero()) rows.at(i, j) = coords[j];
    }
    return rank(rows);
}

PairVector truncate_pair(const PairVector& p) {
    const FieldTag& tag = p.u().tag();
    ExactMatrix u_t = block_compose(ExactMatrix::zeros(tag, p.m(), p.m()), p.u12(),
                                    ExactMatrix::zeros(tag, p.n(), p.m()), p.u22());
    ExactMatrix w_t = block_compose(p.w11(), ExactMatrix::zeros(tag, p.m(), p.n()), p.w21(),
                                    ExactMatrix::zeros(tag, p.n(), p.n()));
    return PairVector(std::move(u_t), std::move(w_t), p.m(), p.n());
}

}  // namespace

ClaimReport check_claims(const StarSylvesterSystem& sys, const std::optional<ExactMatrix>& s) {
    ClaimReport rep;
    std::optional<ExactMatrix> s_inv, s_star, s_star_inv;
    if (s) {
        CongruenceWitness w = verify_congruence(sys, *s);
        if (!w.accepted()) throw InvalidWitness("claim (i) is asserted only under a verified witness");
        rep.s_provided = true;
        s_star = star(*s, sys.mode());
        s_inv = inverse(*s);
        s_star_inv = inverse(*s_star);
    }

    PairSpaceBasis d_basis = pair_space(sys, false);
    PairSpaceBasis d0_basis = pair_space(sys, true);
    rep.dim_d = d_basis.dim;
    rep.dim_d0 = d0_basis.dim;

    // Claim (iv): (-I, I) lies in D_0 and phi maps it to [I_m; 0].
    std::size_t d = sys.m() + sys.n();
    PairVector minus_i_i(-ExactMatrix::identity(sys.tag(), d), ExactMatrix::identity(sys.tag(), d),
                         sys.m(), sys.n());
    ExactMatrix target = vstack(ExactMatrix::identity(sys.tag(), sys.m()),
                                ExactMatrix::zeros(sys.tag(), sys.n(), sys.m()));
    rep.claim_iv = pair_satisfies(sys, minus_i_i, PairSpaceKind::D, true) &&
                   project_phi(minus_i_i) == target;

    // Claim (iii): truncation sends every D basis element into D_0 without
    // changing its phi image.
    rep.claim_iii = true;
    for (const PairVector& p : d_basis.basis) {
        PairVector t = truncate_pair(p);
        if (!pair_satisfies(sys, t, PairSpaceKind::D, true) || !(project_phi(t) == project_phi(p))) {
            rep.claim_iii = false;
            break;
        }
    }

    // Claim (ii): Ker phi_hat = Ker phi_0. Both kernels are computed as
    // nullspaces with the phi blocks pinned to zero, then cross-checked for
    // mutual membership.
    std::vector<PairVector> ker_hat = phi_kernel_basis(sys, false);
    std::vector<PairVector> ker0 = phi_kernel_basis(sys, true);
    rep.dim_ker_phi_hat = ker_hat.size();
    rep.dim_ker_phi0 = ker0.size();
    rep.claim_ii = ker_hat.size() == ker0.size();
    for (const PairVector& p : ker_hat)
        if (!pair_satisfies(sys, p, PairSpaceKind::D, true)) rep.claim_ii = false;
    for (const PairVector& p : ker0)
        if (!pair_satisfies(sys, p, PairSpaceKind::D, false)) rep.claim_ii = false;

    rep.dim_im_phi_hat = phi_image_dim(d_basis.basis, sys);
    rep.dim_im_phi0 = phi_image_dim(d0_basis.basis, sys);
    rep.rank_nullity_ok = rep.dim_ker_phi_hat + rep.dim_im_phi_hat == rep.dim_d &&
                          rep.dim_ker_phi0 + rep.dim_im_phi0 == rep.dim_d0;

    // Claim (i) and the S-twist bijection, under hypothesis (b).
    if (s) {
        rep.claim_i = rep.dim_d == rep.dim_d0;
        rep.twist_ok = true;
        PairLayout layout = layout_for(sys, false);
        ExactMatrix twisted_coords(solve_tag_for(sys.tag(), layout.scheme),
                                   d_basis.basis.size(), layout.dim());
        for (std::size_t i = 0; i < d_basis.basis.size(); ++i) {
            const PairVector& p = d_basis.basis[i];
            PairVector q(p.u() * *s_star, p.w() * *s_inv, sys.m(), sys.n());
            if (!pair_satisfies(sys, q, PairSpaceKind::D, true)) rep.twist_ok = false;
            Vec coords = layout.to_coords(q);
            for (std::size_t j = 0; j < coords.size(); ++j)
                if (!coords[j].is_zero()) twisted_coords.at(i, j) = coords[j];
        }
        // The twist must carry a basis to independent vectors.
        if (rank(twisted_coords) != d_basis.dim) rep.twist_ok = false;
        for (const PairVector& q : d0_basis.basis) {
            PairVector p(q.u() * *s_star_inv, q.w() * *s, sys.m(), sys.n());
            if (!pair_satisfies(sys, p, PairSpaceKind::D, false)) rep.twist_ok = false;
        }
    }
    return rep;
}

std::optional<ExactMatrix> extract_solution(const StarSylvesterSystem& sys) {
    if (sys.tag().characteristic_two())
        throw Char2Unsupported("extraction divides by 2; char 2 is outside the hypothesis");

    ConstraintContext ctx(sys, false);
    PairLayout layout = layout_for(sys, true);
    ExactMatrix w11 = ExactMatrix::identity(sys.tag(), sys.m());
    ExactMatrix w21 = ExactMatrix::zeros(sys.tag(), sys.n(), sys.m());

    ExactMatrix op = constraint_operator(ctx, layout);
    // Affine part: the constraints evaluated at U = 0, W12 = 0, W22 = 0 with
    // the pins in place; the solve target is op * z = -constant.
    Vec zero_coords(layout.dim(), Scalar::zero(solve_tag_for(sys.tag(), layout.scheme)));
    PairVector pinned_only = layout.from_coords(zero_coords, w11, w21);
    Vec constant = ctx.evaluate(pinned_only.u(), pinned_only.w());
    Vec rhs;
    rhs.reserve(constant.size());
    for (const Scalar& c : constant) rhs.push_back(-c);

    AffineSolveResult res = solve_affine(op, rhs);
    if (!res.consistent()) return std::nullopt;

    PairVector p = layout.from_coords(*res.particular, w11, w21);
    Scalar half = Scalar::from_int(sys.tag(), 2).inverse();
    return half * (p.u21() + star(p.w12(), sys.mode()));
}

}  // namespace starsylv
