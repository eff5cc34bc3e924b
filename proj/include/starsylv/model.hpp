#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "starsylv/exactmat.hpp"

namespace starsylv {

struct SystemTriple {
    ExactMatrix a;  // m x n
    ExactMatrix b;  // n x m
    ExactMatrix c;  // m x m
};

// The system A_i X - X^star B_i = C_i, i = 1..ell, over one field with one
// star mode. Shapes and the char != 2 hypothesis are enforced on
// construction (GF(2) tags exist only behind the probe factory).
class StarSylvesterSystem {
public:
    StarSylvesterSystem(const FieldTag& tag, StarMode mode, std::size_t m, std::size_t n,
                        std::vector<SystemTriple> triples);

    const FieldTag& tag() const { return tag_; }
    StarMode mode() const { return mode_; }
    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    std::size_t ell() const { return triples_.size(); }
    const SystemTriple& triple(std::size_t i) const;
    const std::vector<SystemTriple>& triples() const { return triples_; }

    // Same system with every C_i replaced by zero.
    StarSylvesterSystem homogeneous() const;

private:
    FieldTag tag_;
    StarMode mode_;
    std::size_t m_;
    std::size_t n_;
    std::vector<SystemTriple> triples_;
};

// Particular solution plus a basis of the homogeneous solution space. Under
// (QI, H) the equation is only Q-linear, so dim and the basis are over Q
// (the basis elements are Q-linearly independent complex matrices).
struct SolutionSet {
    ExactMatrix particular;                  // n x m
    std::vector<ExactMatrix> homogeneous_basis;  // n x m each
    std::size_t dim;
};

// .ssys grammar (line oriented, '#' starts a comment, blank lines ignored):
//   field Q | QI | GF <p>
//   star T | H
//   dims <m> <n> <ell>
//   then for i = 1..ell, sections "A <i>", "B <i>", "C <i>", each header
//   line followed by the matrix rows (scalar literals, whitespace separated).
StarSylvesterSystem parse_system(std::string_view text, bool allow_char2_probe = false);
std::string serialize_system(const StarSylvesterSystem& sys);

// R_i = A_i X - X^star B_i - C_i for every i; all zero iff X solves the system.
std::vector<ExactMatrix> residual(const StarSylvesterSystem& sys, const ExactMatrix& x);
bool is_solution(const StarSylvesterSystem& sys, const ExactMatrix& x);

struct GeneratedSystem {
    StarSylvesterSystem system;
    ExactMatrix planted;  // n x m, solves system by construction
};

// Deterministic in seed (SplitMix64; draw order: X entries row-major, then
// per equation A_i then B_i, row-major). C_i := A_i X - X^star B_i.
// entry_bound caps numerators and denominators of the drawn entries.
GeneratedSystem gen_consistent(const FieldTag& tag, StarMode mode, std::size_t m, std::size_t n,
                               std::size_t ell, std::uint64_t seed, std::int64_t entry_bound = 9);

// Adds a random nonzero delta to one entry of C_1. Consistency of the result
// is NOT promised either way; the solver or the oracle is the referee. When
// m = 0 there is nothing to perturb and the system is returned unchanged.
StarSylvesterSystem gen_perturbed(const StarSylvesterSystem& sys, std::uint64_t seed,
                                  std::int64_t entry_bound = 9);

}  // namespace starsylv
