// Acceptance suite: one line per criterion, nonzero exit iff any fails.
// Everything here is exact; there are no tolerances to tune. Instance
// streams are seeded and derive their shapes from SplitMix64, so reruns are
// bit-identical.

#include <chrono>
#include <cstdio>
#include <vector>

#include "starsylv/oracle.hpp"
#include "starsylv/rng.hpp"
#include "starsylv/roth.hpp"
#include "starsylv/vecsolve.hpp"

using namespace starsylv;

namespace {

int g_failures = 0;

struct Criterion {
    explicit Criterion(const char* name) : name(name) {}

    const char* name;
    bool ok = true;
    std::vector<std::string> notes;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }

    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s: %s (%.1f s)\n", name, ok ? "PASS" : "FAIL", secs);
        for (const std::string& note : notes) std::printf("  - %s\n", note.c_str());
        if (!ok) ++g_failures;
        std::fflush(stdout);
    }
};

struct Dims {
    std::size_t m, n, ell;
};

Dims draw_dims(std::uint64_t seed, std::size_t max_mn, std::size_t max_ell) {
    SplitMix64 rng(seed ^ 0x5eedd1a15ULL);
    return Dims{1 + rng.next_below(max_mn), 1 + rng.next_below(max_mn), 1 + rng.next_below(max_ell)};
}

std::string tagline(std::uint64_t seed, const Dims& d) {
    return "seed " + std::to_string(seed) + " dims (" + std::to_string(d.m) + "," +
           std::to_string(d.n) + "," + std::to_string(d.ell) + ")";
}

// AC1: 200 seeded consistent systems over Q with star T, m,n in 1..4,
// ell in 1..3; the constructed witness passes verification exactly on every
// equation.
void ac1() {
    Criterion c{"AC1 witness construction (a)=>(b), 200 systems over Q"};
    for (std::uint64_t seed = 1; seed <= 200 && c.ok; ++seed) {
        Dims d = draw_dims(seed, 4, 3);
        GeneratedSystem g = gen_consistent(FieldTag::rationals(), StarMode::Transpose, d.m, d.n,
                                           d.ell, seed);
        CongruenceWitness w = witness_from_solution(g.system, g.planted);
        c.require(w.invertible, tagline(seed, d) + ": witness not invertible");
        for (std::size_t i = 0; i < w.per_equation_ok.size(); ++i)
            c.require(w.per_equation_ok[i],
                      tagline(seed, d) + ": equation " + std::to_string(i + 1) + " failed");
    }
}

// AC2: on the same 200 systems, extraction returns an exact solution without
// ever seeing the planted one.
void ac2() {
    Criterion c{"AC2 extraction (b)=>(a) machinery, same 200 systems"};
    for (std::uint64_t seed = 1; seed <= 200 && c.ok; ++seed) {
        Dims d = draw_dims(seed, 4, 3);
        GeneratedSystem g = gen_consistent(FieldTag::rationals(), StarMode::Transpose, d.m, d.n,
                                           d.ell, seed);
        auto x = extract_solution(g.system);
        c.require(x.has_value(), tagline(seed, d) + ": extraction came back empty");
        if (x) c.require(is_solution(g.system, *x), tagline(seed, d) + ": nonzero residual");
    }
}

// AC3: GF(3), star T, m,n <= 2, ell <= 2: 100 seeded consistent systems plus
// their 100 perturbed variants. Brute force, the vectorized solver and
// extraction must agree on all 200; on consistent instances the brute-force
// count equals 3^dim.
void ac3() {
    Criterion c{"AC3 oracle equivalence over GF(3), 200 instances"};
    FieldTag gf3 = FieldTag::prime_field(3);
    std::size_t checked = 0;
    for (std::uint64_t seed = 1; seed <= 100 && c.ok; ++seed) {
        Dims d = draw_dims(seed, 2, 2);
        GeneratedSystem g = gen_consistent(gf3, StarMode::Transpose, d.m, d.n, d.ell, seed);
        StarSylvesterSystem perturbed = gen_perturbed(g.system, seed + 5000);
        for (const StarSylvesterSystem& sys : {g.system, perturbed}) {
            BruteForceVerdict bf = brute_force_consistency(sys);
            Verdict v = solve(sys);
            auto x = extract_solution(sys);
            c.require(bf.consistent == v.consistent(),
                      tagline(seed, d) + ": solver disagrees with brute force");
            c.require(bf.consistent == x.has_value(),
                      tagline(seed, d) + ": extraction disagrees with brute force");
            if (v.consistent()) {
                c.require(is_solution(sys, v.solution->particular),
                          tagline(seed, d) + ": solver residual nonzero");
                c.require(bf.solutions == solution_count_gf(sys, *v.solution),
                          tagline(seed, d) + ": count != 3^dim");
            }
            if (x) c.require(is_solution(sys, *x), tagline(seed, d) + ": extraction residual nonzero");
            ++checked;
        }
    }
    c.require(checked == 200 || !c.ok, "expected 200 instances");
}

// AC4: claims (ii), (iii), (iv) and the corrected rank-nullity identity on
// 50 arbitrary systems (half perturbed, mixed fields, inconsistent ones
// included); claim (i) and the S-twist on 50 consistent systems with
// constructed witnesses.
void ac4() {
    Criterion c{"AC4 claims (i)-(iv), 50 arbitrary + 50 witnessed systems"};
    struct Case {
        FieldTag tag;
        StarMode mode;
    };
    std::vector<Case> cases = {{FieldTag::rationals(), StarMode::Transpose},
                               {FieldTag::gaussian_rationals(), StarMode::Transpose},
                               {FieldTag::gaussian_rationals(), StarMode::ConjugateTranspose},
                               {FieldTag::prime_field(3), StarMode::Transpose},
                               {FieldTag::prime_field(5), StarMode::Transpose}};
    std::size_t inconsistent_seen = 0;
    for (std::uint64_t seed = 1; seed <= 50 && c.ok; ++seed) {
        const Case& cs = cases[seed % cases.size()];
        Dims d = draw_dims(seed, 2, 2);
        GeneratedSystem g = gen_consistent(cs.tag, cs.mode, d.m, d.n, d.ell, seed);
        StarSylvesterSystem sys = seed % 2 == 0 ? gen_perturbed(g.system, seed + 9000) : g.system;
        if (!solve(sys).consistent()) ++inconsistent_seen;
        ClaimReport rep = check_claims(sys);
        c.require(rep.claim_ii, tagline(seed, d) + ": claim (ii) failed");
        c.require(rep.claim_iii, tagline(seed, d) + ": claim (iii) failed");
        c.require(rep.claim_iv, tagline(seed, d) + ": claim (iv) failed");
        c.require(rep.rank_nullity_ok, tagline(seed, d) + ": rank-nullity identity failed");
    }
    c.require(inconsistent_seen > 0, "perturbation never produced an inconsistent instance");
    for (std::uint64_t seed = 101; seed <= 150 && c.ok; ++seed) {
        const Case& cs = cases[seed % cases.size()];
        Dims d = draw_dims(seed, 2, 2);
        GeneratedSystem g = gen_consistent(cs.tag, cs.mode, d.m, d.n, d.ell, seed);
        CongruenceWitness w = witness_from_solution(g.system, g.planted);
        ClaimReport rep = check_claims(g.system, w.s);
        c.require(rep.claim_i, tagline(seed, d) + ": dim D != dim D0 under a witness");
        c.require(rep.twist_ok, tagline(seed, d) + ": S-twist bijection failed");
    }
}

// AC5: 50 seeded consistent (QI, H) systems with m,n <= 3: solve and extract
// both return exact-zero-residual solutions; the fixture x - conj(x) = 1 is
// inconsistent.
void ac5() {
    Criterion c{"AC5 realified (QI, H) solve + extract, 50 systems"};
    FieldTag qi = FieldTag::gaussian_rationals();
    for (std::uint64_t seed = 1; seed <= 50 && c.ok; ++seed) {
        Dims d = draw_dims(seed, 3, 2);
        GeneratedSystem g = gen_consistent(qi, StarMode::ConjugateTranspose, d.m, d.n, d.ell, seed);
        Verdict v = solve(g.system);
        c.require(v.consistent(), tagline(seed, d) + ": solver reported inconsistent");
        if (v.consistent())
            c.require(is_solution(g.system, v.solution->particular),
                      tagline(seed, d) + ": solver residual nonzero");
        auto x = extract_solution(g.system);
        c.require(x.has_value(), tagline(seed, d) + ": extraction came back empty");
        if (x) c.require(is_solution(g.system, *x), tagline(seed, d) + ": extraction residual nonzero");
    }
    StarSylvesterSystem fixture =
        parse_system("field QI\nstar H\ndims 1 1 1\nA 1\n1\nB 1\n1\nC 1\n1\n");
    c.require(!solve(fixture).consistent(), "x - conj(x) = 1 was not refuted by the solver");
    c.require(!extract_solution(fixture).has_value(), "x - conj(x) = 1 was not refuted by extraction");
}

// AC6: GF(2) inputs are rejected without the probe flag; the probe runs to
// completion at m+n <= 3 and never finds a_holds without b_holds.
void ac6() {
    Criterion c{"AC6 char-2 hypothesis gate + probe"};
    const char* gf2 = "field GF 2\nstar T\ndims 1 1 1\nA 1\n1\nB 1\n1\nC 1\n0\n";
    bool rejected = false;
    try {
        parse_system(gf2);
    } catch (const Char2Rejected&) {
        rejected = true;
    }
    c.require(rejected, "GF(2) input was not rejected without the probe flag");
    try {
        StarSylvesterSystem sys = parse_system(gf2, /*allow_char2_probe=*/true);
        c.require(sys.tag().characteristic_two(), "probe parse lost the GF(2) tag");
    } catch (const Error& e) {
        c.require(false, std::string("probe parse failed: ") + e.what());
    }
    ProbeReport rep = probe_char2(3, 424242, 60, /*probe_enabled=*/true);
    c.require(rep.instances.size() == 60, "probe did not complete all samples");
    c.require(rep.count_a_without_b == 0, "found a_holds without b_holds");
}

// AC7: parse(serialize(.)) is the identity on 100 generated systems across
// all three fields and both star modes.
void ac7() {
    Criterion c{"AC7 .ssys round trip identity, 100 systems"};
    struct Case {
        FieldTag tag;
        StarMode mode;
    };
    std::vector<Case> cases = {{FieldTag::rationals(), StarMode::Transpose},
                               {FieldTag::gaussian_rationals(), StarMode::Transpose},
                               {FieldTag::gaussian_rationals(), StarMode::ConjugateTranspose},
                               {FieldTag::prime_field(3), StarMode::Transpose},
                               {FieldTag::prime_field(11), StarMode::Transpose}};
    for (std::uint64_t seed = 1; seed <= 100 && c.ok; ++seed) {
        const Case& cs = cases[seed % cases.size()];
        Dims d = draw_dims(seed, 3, 3);
        GeneratedSystem g = gen_consistent(cs.tag, cs.mode, d.m, d.n, d.ell, seed);
        std::string text = serialize_system(g.system);
        StarSylvesterSystem back = parse_system(text);
        bool same = back.tag() == g.system.tag() && back.mode() == g.system.mode() &&
                    back.m() == g.system.m() && back.n() == g.system.n() &&
                    back.ell() == g.system.ell();
        for (std::size_t i = 0; same && i < back.ell(); ++i)
            same = back.triple(i).a == g.system.triple(i).a &&
                   back.triple(i).b == g.system.triple(i).b &&
                   back.triple(i).c == g.system.triple(i).c;
        c.require(same, tagline(seed, d) + ": round trip changed the system");
        c.require(serialize_system(back) == text, tagline(seed, d) + ": reserialization differs");
    }
}

}  // namespace

int main() {
    ac1();
    ac2();
    ac3();
    ac4();
    ac5();
    ac6();
    ac7();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
