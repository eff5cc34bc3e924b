#include "starsylv/oracle.hpp"

#include "starsylv/exactmat.hpp"
#include "starsylv/rng.hpp"

namespace starsylv {

BruteForceVerdict brute_force_consistency(const StarSylvesterSystem& sys, std::uint64_t cap) {
    if (sys.tag().kind() != FieldKind::PrimeField)
        throw FieldMismatch("brute force enumeration requires a GF(p) system");
    std::uint64_t p = sys.tag().modulus();
    std::size_t cells = sys.n() * sys.m();

    mpz_class space;
    mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(cells));
    if (space > mpz_class(static_cast<unsigned long>(cap)))
        throw SearchSpaceTooLarge("p^(n*m) = " + space.get_str() + " exceeds cap " + std::to_string(cap));

    std::vector<std::uint64_t> digits(cells, 0);
    ExactMatrix x(sys.tag(), sys.n(), sys.m());
    mpz_class count = 0;
    while (true) {
        for (std::size_t t = 0; t < cells; ++t)
            x.at(t / sys.m(), t % sys.m()) = Scalar::residue(sys.tag(), mpz_class(static_cast<unsigned long>(digits[t])));
        if (is_solution(sys, x)) ++count;
        // Odometer increment, least-significant cell first.
        std::size_t t = 0;
        while (t < cells && ++digits[t] == p) digits[t++] = 0;
        if (t == cells) break;
    }
    return BruteForceVerdict{count > 0, count};
}

namespace {

// All invertible S over GF(2) of size d, enumerated once per distinct d.
std::vector<ExactMatrix> gl2_elements(const FieldTag& tag, std::size_t d) {
    std::vector<ExactMatrix> out;
    std::size_t bits = d * d;
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
        ExactMatrix s(tag, d, d);
        for (std::size_t b = 0; b < bits; ++b)
            if (mask >> b & 1) s.at(b / d, b % d) = Scalar::one(tag);
        if (rank(s) == d) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

ProbeReport probe_char2(std::size_t max_total_dim, std::uint64_t seed, std::size_t sample_count,
                        bool probe_enabled) {
    if (!probe_enabled) throw ProbeDisabled("char-2 probe requires the explicit probe flag");
    if (max_total_dim < 2) throw Error("probe needs m + n >= 2");
    if (max_total_dim > 4)
        throw SearchSpaceTooLarge("exhaustive GL enumeration above m+n = 4 is not supported");

    FieldTag tag = FieldTag::prime_field_probe(2);
    SplitMix64 rng(seed);

    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t m = 1; m < max_total_dim; ++m)
        for (std::size_t n = 1; m + n <= max_total_dim; ++n) shapes.emplace_back(m, n);

    // Cache GL_d(GF(2)) per dimension.
    std::vector<std::vector<ExactMatrix>> gl(max_total_dim + 1);

    ProbeReport report;
    report.instances.reserve(sample_count);
    for (std::size_t k = 0; k < sample_count; ++k) {
        auto [m, n] = shapes[rng.next_below(shapes.size())];
        std::size_t ell = 1 + rng.next_below(2);
        std::vector<SystemTriple> triples;
        auto draw = [&](std::size_t r, std::size_t c) {
            ExactMatrix out(tag, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    out.at(i, j) = Scalar::residue(tag, mpz_class(static_cast<unsigned long>(rng.next_below(2))));
            return out;
        };
        for (std::size_t i = 0; i < ell; ++i)
            triples.push_back(SystemTriple{draw(m, n), draw(n, m), draw(m, m)});
        StarSylvesterSystem sys(tag, StarMode::Transpose, m, n, std::move(triples));

        bool a_holds = brute_force_consistency(sys, 1ULL << 16).consistent;

        std::size_t d = m + n;
        if (gl[d].empty()) gl[d] = gl2_elements(tag, d);
        // M_i and N_i as in the congruence condition, star = plain transpose.
        std::vector<ExactMatrix> ms_blocks, ns_blocks;
        for (std::size_t i = 0; i < ell; ++i) {
            const SystemTriple& t = sys.triple(i);
            ms_blocks.push_back(block_compose(t.c, -t.a, t.b, ExactMatrix::zeros(tag, n, n)));
            ns_blocks.push_back(block_compose(ExactMatrix::zeros(tag, m, m), -t.a, t.b,
                                              ExactMatrix::zeros(tag, n, n)));
        }
        bool b_holds = false;
        for (const ExactMatrix& s : gl[d]) {
            ExactMatrix s_t = star(s, StarMode::Transpose);
            bool all_ok = true;
            for (std::size_t i = 0; i < ell && all_ok; ++i)
                all_ok = s * ms_blocks[i] * s_t == ns_blocks[i];
            if (all_ok) {
                b_holds = true;
                break;
            }
        }

        if (a_holds && !b_holds) ++report.count_a_without_b;
        if (b_holds && !a_holds) ++report.count_b_without_a;
        report.instances.push_back(ProbeInstance{serialize_system(sys), m, n, ell, a_holds, b_holds});
    }
    return report;
}

}  // namespace starsylv
