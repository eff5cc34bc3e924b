#include "starsylv/model.hpp"

#include <sstream>

#include "starsylv/rng.hpp"

namespace starsylv {

StarSylvesterSystem::StarSylvesterSystem(const FieldTag& tag, StarMode mode, std::size_t m,
                                         std::size_t n, std::vector<SystemTriple> triples)
    : tag_(tag), mode_(mode), m_(m), n_(n), triples_(std::move(triples)) {
    if (mode_ == StarMode::ConjugateTranspose && !tag_.has_conjugation())
        throw InvalidStarMode("star H requires field QI");
    if (triples_.empty()) throw ShapeMismatch("a system needs at least one equation");
    for (std::size_t i = 0; i < triples_.size(); ++i) {
        const SystemTriple& t = triples_[i];
        if (t.a.tag() != tag_ || t.b.tag() != tag_ || t.c.tag() != tag_)
            throw FieldMismatch("equation " + std::to_string(i + 1) + " is over a different field");
        if (t.a.rows() != m_ || t.a.cols() != n_)
            throw ShapeMismatch("A_" + std::to_string(i + 1) + " must be " + std::to_string(m_) + "x" +
                                std::to_string(n_));
        if (t.b.rows() != n_ || t.b.cols() != m_)
            throw ShapeMismatch("B_" + std::to_string(i + 1) + " must be " + std::to_string(n_) + "x" +
                                std::to_string(m_));
        if (t.c.rows() != m_ || t.c.cols() != m_)
            throw ShapeMismatch("C_" + std::to_string(i + 1) + " must be " + std::to_string(m_) + "x" +
                                std::to_string(m_));
    }
}

const SystemTriple& StarSylvesterSystem::triple(std::size_t i) const {
    if (i >= triples_.size()) throw IndexOutOfRange("equation index " + std::to_string(i));
    return triples_[i];
}

StarSylvesterSystem StarSylvesterSystem::homogeneous() const {
    std::vector<SystemTriple> zeroed = triples_;
    for (SystemTriple& t : zeroed) t.c = ExactMatrix::zeros(tag_, m_, m_);
    return StarSylvesterSystem(tag_, mode_, m_, n_, std::move(zeroed));
}

std::vector<ExactMatrix> residual(const StarSylvesterSystem& sys, const ExactMatrix& x) {
    if (x.tag() != sys.tag()) throw FieldMismatch("solution candidate field differs from system");
    if (x.rows() != sys.n() || x.cols() != sys.m())
        throw ShapeMismatch("X must be " + std::to_string(sys.n()) + "x" + std::to_string(sys.m()));
    ExactMatrix xs = star(x, sys.mode());
    std::vector<ExactMatrix> out;
    out.reserve(sys.ell());
    for (const SystemTriple& t : sys.triples()) out.push_back(t.a * x - xs * t.b - t.c);
    return out;
}

bool is_solution(const StarSylvesterSystem& sys, const ExactMatrix& x) {
    for (const ExactMatrix& r : residual(sys, x))
        if (!r.is_zero()) return false;
    return true;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct LineReader {
    std::istringstream in;
    std::size_t lineno = 0;

    explicit LineReader(std::string_view text) : in(std::string(text)) {}

    bool next(std::vector<std::string>& toks) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            toks = tokens_of(line);
            if (!toks.empty()) return true;
        }
        return false;
    }
};

std::size_t parse_count(const std::string& tok, LineReader& rd) {
    try {
        if (!tok.empty() && tok[0] == '-') throw std::invalid_argument("negative");
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw SyntaxError("expected a nonnegative integer, got '" + tok + "'", rd.lineno, 1);
    }
}

ExactMatrix read_matrix_rows(LineReader& rd, const FieldTag& tag, std::size_t rows, std::size_t cols,
                             const std::string& what) {
    ExactMatrix m(tag, rows, cols);
    if (cols == 0) return m;  // zero-column rows carry no tokens and no lines
    std::vector<std::string> toks;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!rd.next(toks)) throw SyntaxError("missing row of " + what, rd.lineno + 1, 1);
        if (toks.size() != cols)
            throw ShapeMismatch("line " + std::to_string(rd.lineno) + ": " + what + " row needs " +
                                std::to_string(cols) + " entries, got " + std::to_string(toks.size()));
        for (std::size_t c = 0; c < cols; ++c) {
            try {
                m.at(r, c) = Scalar::parse(tag, toks[c]);
            } catch (const Error& e) {
                throw SyntaxError(e.what(), rd.lineno, c + 1);
            }
        }
    }
    return m;
}

}  // namespace

StarSylvesterSystem parse_system(std::string_view text, bool allow_char2_probe) {
    LineReader rd(text);
    std::vector<std::string> toks;

    if (!rd.next(toks) || toks[0] != "field")
        throw SyntaxError("expected 'field Q | QI | GF <p>'", rd.lineno == 0 ? 1 : rd.lineno, 1);
    FieldTag tag = FieldTag::rationals();
    if (toks.size() == 2 && toks[1] == "Q") {
        tag = FieldTag::rationals();
    } else if (toks.size() == 2 && toks[1] == "QI") {
        tag = FieldTag::gaussian_rationals();
    } else if (toks.size() == 3 && toks[1] == "GF") {
        std::size_t p = parse_count(toks[2], rd);
        if (p == 2 && !allow_char2_probe)
            throw Char2Rejected("line " + std::to_string(rd.lineno) +
                                ": GF(2) violates the char != 2 hypothesis; rerun with the probe flag");
        try {
            tag = allow_char2_probe ? FieldTag::prime_field_probe(p) : FieldTag::prime_field(p);
        } catch (const Char2Rejected&) {
            throw;
        } catch (const Error& e) {
            throw SyntaxError(e.what(), rd.lineno, 1);
        }
    } else {
        throw SyntaxError("expected 'field Q | QI | GF <p>'", rd.lineno, 1);
    }

    if (!rd.next(toks) || toks.size() != 2 || toks[0] != "star" || (toks[1] != "T" && toks[1] != "H"))
        throw SyntaxError("expected 'star T | H'", rd.lineno == 0 ? 1 : rd.lineno, 1);
    StarMode mode = toks[1] == "H" ? StarMode::ConjugateTranspose : StarMode::Transpose;
    if (mode == StarMode::ConjugateTranspose && !tag.has_conjugation())
        throw InvalidStarMode("line " + std::to_string(rd.lineno) + ": star H requires field QI");

    if (!rd.next(toks) || toks.size() != 4 || toks[0] != "dims")
        throw SyntaxError("expected 'dims <m> <n> <ell>'", rd.lineno == 0 ? 1 : rd.lineno, 1);
    std::size_t m = parse_count(toks[1], rd);
    std::size_t n = parse_count(toks[2], rd);
    std::size_t ell = parse_count(toks[3], rd);
    if (ell == 0) throw SyntaxError("ell must be at least 1", rd.lineno, 1);

    std::vector<SystemTriple> triples;
    triples.reserve(ell);
    for (std::size_t i = 1; i <= ell; ++i) {
        auto expect_header = [&](const std::string& name) {
            if (!rd.next(toks) || toks.size() != 2 || toks[0] != name || toks[1] != std::to_string(i))
                throw SyntaxError("expected section '" + name + " " + std::to_string(i) + "'",
                                  rd.lineno == 0 ? 1 : rd.lineno, 1);
        };
        expect_header("A");
        ExactMatrix a = read_matrix_rows(rd, tag, m, n, "A " + std::to_string(i));
        expect_header("B");
        ExactMatrix b = read_matrix_rows(rd, tag, n, m, "B " + std::to_string(i));
        expect_header("C");
        ExactMatrix c = read_matrix_rows(rd, tag, m, m, "C " + std::to_string(i));
        triples.push_back(SystemTriple{std::move(a), std::move(b), std::move(c)});
    }
    if (rd.next(toks)) throw SyntaxError("unexpected trailing content", rd.lineno, 1);
    return StarSylvesterSystem(tag, mode, m, n, std::move(triples));
}

std::string serialize_system(const StarSylvesterSystem& sys) {
    std::ostringstream out;
    switch (sys.tag().kind()) {
        case FieldKind::Rationals: out << "field Q\n"; break;
        case FieldKind::GaussianRationals: out << "field QI\n"; break;
        case FieldKind::PrimeField: out << "field GF " << sys.tag().modulus() << '\n'; break;
    }
    out << "star " << (sys.mode() == StarMode::ConjugateTranspose ? 'H' : 'T') << '\n';
    out << "dims " << sys.m() << ' ' << sys.n() << ' ' << sys.ell() << '\n';
    auto rows = [&](const ExactMatrix& m) {
        if (m.cols() == 0) return;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (c != 0) out << ' ';
                out << m.at(r, c).to_string();
            }
            out << '\n';
        }
    };
    for (std::size_t i = 0; i < sys.ell(); ++i) {
        const SystemTriple& t = sys.triple(i);
        out << "A " << i + 1 << '\n';
        rows(t.a);
        out << "B " << i + 1 << '\n';
        rows(t.b);
        out << "C " << i + 1 << '\n';
        rows(t.c);
    }
    return out.str();
}

namespace {

Scalar draw_entry(SplitMix64& rng, const FieldTag& tag, std::int64_t bound) {
    switch (tag.kind()) {
        case FieldKind::PrimeField:
            return Scalar::residue(tag, mpz_class(static_cast<unsigned long>(rng.next_below(tag.modulus()))));
        case FieldKind::Rationals: {
            std::int64_t num = rng.next_in(-bound, bound);
            std::int64_t den = rng.next_in(1, bound);
            mpq_class q(static_cast<long>(num), static_cast<long>(den));
            q.canonicalize();
            return Scalar::rational(q);
        }
        case FieldKind::GaussianRationals: {
            std::int64_t re_num = rng.next_in(-bound, bound);
            std::int64_t re_den = rng.next_in(1, bound);
            std::int64_t im_num = rng.next_in(-bound, bound);
            std::int64_t im_den = rng.next_in(1, bound);
            mpq_class re(static_cast<long>(re_num), static_cast<long>(re_den));
            mpq_class im(static_cast<long>(im_num), static_cast<long>(im_den));
            re.canonicalize();
            im.canonicalize();
            return Scalar::gaussian(re, im);
        }
    }
    throw Error("unreachable");
}

ExactMatrix draw_matrix(SplitMix64& rng, const FieldTag& tag, std::size_t rows, std::size_t cols,
                        std::int64_t bound) {
    ExactMatrix m(tag, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = draw_entry(rng, tag, bound);
    return m;
}

}  // namespace

GeneratedSystem gen_consistent(const FieldTag& tag, StarMode mode, std::size_t m, std::size_t n,
                               std::size_t ell, std::uint64_t seed, std::int64_t entry_bound) {
    if (entry_bound < 1) throw Error("entry_bound must be at least 1");
    SplitMix64 rng(seed);
    ExactMatrix x = draw_matrix(rng, tag, n, m, entry_bound);
    ExactMatrix xs = star(x, mode);
    std::vector<SystemTriple> triples;
    triples.reserve(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        ExactMatrix a = draw_matrix(rng, tag, m, n, entry_bound);
        ExactMatrix b = draw_matrix(rng, tag, n, m, entry_bound);
        ExactMatrix c = a * x - xs * b;
        triples.push_back(SystemTriple{std::move(a), std::move(b), std::move(c)});
    }
    return GeneratedSystem{StarSylvesterSystem(tag, mode, m, n, std::move(triples)), std::move(x)};
}

StarSylvesterSystem gen_perturbed(const StarSylvesterSystem& sys, std::uint64_t seed,
                                  std::int64_t entry_bound) {
    if (sys.m() == 0) return sys;
    SplitMix64 rng(seed);
    std::size_t r = rng.next_below(sys.m());
    std::size_t c = rng.next_below(sys.m());
    Scalar delta = draw_entry(rng, sys.tag(), entry_bound);
    while (delta.is_zero()) delta = draw_entry(rng, sys.tag(), entry_bound);
    std::vector<SystemTriple> triples = sys.triples();
    triples[0].c.at(r, c) += delta;
    return StarSylvesterSystem(sys.tag(), sys.mode(), sys.m(), sys.n(), std::move(triples));
}

}  // namespace starsylv
