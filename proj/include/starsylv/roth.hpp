#pragma once

#include <optional>

#include "starsylv/coords.hpp"
#include "starsylv/model.hpp"

namespace starsylv {

// The two (m+n)x(m+n) block matrices of the congruence condition:
//   M_i = [[C_i, -A_i], [B_i, 0]],   N_i = [[0, -A_i], [B_i, 0]].
// Equation indices are 0-based, range-checked.
ExactMatrix block_m(const StarSylvesterSystem& sys, std::size_t i);
ExactMatrix block_n(const StarSylvesterSystem& sys, std::size_t i);

// Witness verdict: accepted iff S is invertible and S M_i S^star = N_i holds
// exactly for every equation.
struct CongruenceWitness {
    ExactMatrix s;
    bool invertible;
    std::vector<bool> per_equation_ok;
    bool accepted() const {
        if (!invertible) return false;
        for (bool ok : per_equation_ok)
            if (!ok) return false;
        return true;
    }
};

// From a solution X, the unitriangular witness S = [[I_m, X^star], [0, I_n]]
// (conformal block sizes; X is n x m so X^star is m x n). Throws NotASolution
// when X does not solve the system.
CongruenceWitness witness_from_solution(const StarSylvesterSystem& sys, const ExactMatrix& x);

// Checks an arbitrary candidate S by direct multiplication.
CongruenceWitness verify_congruence(const StarSylvesterSystem& sys, const ExactMatrix& s);

// A pair (U, W) of (m+n)x(m+n) matrices with the block partition at (m, m):
// U11, W11 are m x m and U22, W22 are n x n.
class PairVector {
public:
    PairVector(ExactMatrix u, ExactMatrix w, std::size_t m, std::size_t n);

    const ExactMatrix& u() const { return u_; }
    const ExactMatrix& w() const { return w_; }
    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }

    ExactMatrix u11() const { return slice_u(0); }
    ExactMatrix u12() const { return slice_u(1); }
    ExactMatrix u21() const { return slice_u(2); }
    ExactMatrix u22() const { return slice_u(3); }
    ExactMatrix w11() const { return slice_w(0); }
    ExactMatrix w12() const { return slice_w(1); }
    ExactMatrix w21() const { return slice_w(2); }
    ExactMatrix w22() const { return slice_w(3); }

private:
    ExactMatrix slice_u(int which) const;
    ExactMatrix slice_w(int which) const;
    ExactMatrix u_;
    ExactMatrix w_;
    std::size_t m_;
    std::size_t n_;
};

// Which defining constraints a basis satisfies. Gamma_i is
// N_i U + W M_i = 0; Delta_i is U^star N_i + M_i W^star = 0; D intersects
// both over every equation.
enum class PairSpaceKind { D, Gamma, Delta };

struct PairSpaceBasis {
    PairSpaceKind kind;
    bool homogeneous;                     // built with every C_i := 0 (D_0 etc.)
    std::optional<std::size_t> equation;  // engaged for Gamma/Delta
    std::vector<PairVector> basis;
    std::size_t dim;
    bool realified;  // dim is a Q-dimension ((QI, H) systems)
};

// Basis of D (homogeneous = false) or D_0 (homogeneous = true), computed as
// one exact nullspace over the 2(m+n)^2 pair coordinates (doubled when
// realified).
PairSpaceBasis pair_space(const StarSylvesterSystem& sys, bool homogeneous);

// Single-constraint selector: the Gamma or Delta space of one equation.
PairSpaceBasis pair_space_component(const StarSylvesterSystem& sys, PairSpaceKind kind,
                                    std::size_t eq_index, bool homogeneous);

// Does (U, W) satisfy the defining constraints exactly? kind/eq as above.
bool pair_satisfies(const StarSylvesterSystem& sys, const PairVector& p, PairSpaceKind kind,
                    bool homogeneous, std::optional<std::size_t> eq_index = std::nullopt);

// The projection (U, W) -> [W11; W21], an (m+n) x m matrix.
ExactMatrix project_phi(const PairVector& p);

// Mechanized checks of the four claims behind the congruence => solution
// direction, with phi_hat = phi restricted to D and phi_0 = phi restricted
// to D_0:
//   (i)   dim D = dim D_0                     (needs a verified witness S)
//   (ii)  Ker phi_hat = Ker phi_0             (mutual membership of kernels)
//   (iii) Im phi_hat is contained in Im phi_0 (truncation lands in D_0)
//   (iv)  [I_m; 0] lies in phi(D_0)           (explicit membership of (-I, I))
// (ii)-(iv) need no hypothesis and are always checked. Kernel/image
// dimensions are reported together with the rank-nullity identity
// dim Ker + dim Im = dim of the restricted space.
struct ClaimReport {
    std::size_t dim_d = 0;
    std::size_t dim_d0 = 0;
    std::size_t dim_ker_phi_hat = 0;
    std::size_t dim_im_phi_hat = 0;
    std::size_t dim_ker_phi0 = 0;
    std::size_t dim_im_phi0 = 0;
    bool rank_nullity_ok = false;
    bool claim_ii = false;
    bool claim_iii = false;
    bool claim_iv = false;
    bool s_provided = false;
    bool claim_i = false;   // meaningful when s_provided
    bool twist_ok = false;  // (U,W) in D <-> (U S^star, W S^-1) in D_0, both ways
};

ClaimReport check_claims(const StarSylvesterSystem& sys,
                         const std::optional<ExactMatrix>& s = std::nullopt);

// The constructive congruence => solution direction: solve the affine system
// {Gamma_i, Delta_i constraints for all i} with W11 = I_m, W21 = 0 pinned;
// on success X = (U21 + W12^star) / 2 solves the system. Returns nullopt iff
// that affine system is inconsistent (equivalently, iff the system has no
// solution). Throws Char2Unsupported over GF(2).
std::optional<ExactMatrix> extract_solution(const StarSylvesterSystem& sys);

}  // namespace starsylv
