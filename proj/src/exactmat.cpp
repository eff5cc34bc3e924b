#include "starsylv/exactmat.hpp"

#include <sstream>
#include <utility>

namespace starsylv {

namespace {

void require_same_tag(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.tag() != b.tag())
        throw FieldMismatch("matrix operation across fields " + a.tag().name() + " and " + b.tag().name());
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("expected " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            ", got " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

}  // namespace

ExactMatrix::ExactMatrix(const FieldTag& tag, std::size_t rows, std::size_t cols)
    : tag_(tag), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(tag)) {}

ExactMatrix ExactMatrix::zeros(const FieldTag& tag, std::size_t rows, std::size_t cols) {
    return ExactMatrix(tag, rows, cols);
}

ExactMatrix ExactMatrix::identity(const FieldTag& tag, std::size_t n) {
    ExactMatrix m(tag, n, n);
    Scalar one = Scalar::one(tag);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const Scalar& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out = *this;
    for (Scalar& e : out.entries_) e = -e;
    return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_tag(a, b);
    require_same_shape(a, b);
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_tag(a, b);
    require_same_shape(a, b);
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_tag(a, b);
    if (a.cols() != b.rows())
        throw ShapeMismatch("product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    ExactMatrix out(a.tag(), a.rows(), b.cols());
    // Zero entries are common (elementary basis matrices, block zeros); skip
    // them instead of multiplying through.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

ExactMatrix operator*(const Scalar& s, const ExactMatrix& m) {
    if (s.tag() != m.tag()) throw FieldMismatch("scalar/matrix field mismatch");
    ExactMatrix out = m;
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) *= s;
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_tag(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (a.entries_[i] != b.entries_[i]) return false;
    return true;
}

Vec ExactMatrix::to_vec() const { return entries_; }

ExactMatrix ExactMatrix::from_vec(const FieldTag& tag, std::size_t rows, std::size_t cols, const Vec& v) {
    if (v.size() != rows * cols) throw ShapeMismatch("vec length does not match matrix shape");
    ExactMatrix m(tag, rows, cols);
    m.entries_ = v;
    return m;
}

ExactMatrix star(const ExactMatrix& m, StarMode mode) {
    if (mode == StarMode::ConjugateTranspose && !m.tag().has_conjugation())
        throw InvalidStarMode("conjugate transpose over " + m.tag().name() +
                              " aliases plain transpose; use star T");
    ExactMatrix out(m.tag(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.at(c, r) = mode == StarMode::ConjugateTranspose ? m.at(r, c).conj() : m.at(r, c);
    return out;
}

namespace {

// Gauss-Jordan on an augmented width: columns >= main_cols are carried along
// but never pivoted on. Returns pivot columns of the main block.
struct EchelonScratch {
    ExactMatrix r;
    std::vector<std::size_t> pivot_cols;
};

EchelonScratch reduce(const ExactMatrix& m, std::size_t main_cols) {
    EchelonScratch s{m, {}};
    ExactMatrix& r = s.r;
    std::size_t row = 0;
    for (std::size_t col = 0; col < main_cols && row < r.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < r.rows() && r.at(pivot, col).is_zero()) ++pivot;
        if (pivot == r.rows()) continue;
        if (pivot != row)
            for (std::size_t c = col; c < r.cols(); ++c) std::swap(r.at(row, c), r.at(pivot, c));
        Scalar inv = r.at(row, col).inverse();
        for (std::size_t c = col; c < r.cols(); ++c)
            if (!r.at(row, c).is_zero()) r.at(row, c) *= inv;
        for (std::size_t q = 0; q < r.rows(); ++q) {
            if (q == row) continue;
            const Scalar factor = r.at(q, col);
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < r.cols(); ++c) {
                if (r.at(row, c).is_zero()) continue;
                r.at(q, c) -= factor * r.at(row, c);
            }
        }
        s.pivot_cols.push_back(col);
        ++row;
    }
    return s;
}

std::vector<Vec> nullspace_from_echelon(const EchelonScratch& s, const FieldTag& tag, std::size_t cols) {
    std::vector<Vec> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        if (next_pivot < s.pivot_cols.size() && s.pivot_cols[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        Vec v(cols, Scalar::zero(tag));
        v[col] = Scalar::one(tag);
        for (std::size_t p = 0; p < s.pivot_cols.size(); ++p)
            v[s.pivot_cols[p]] = -s.r.at(p, col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
    EchelonScratch s = reduce(m, m.cols());
    return RrefResult{std::move(s.r), s.pivot_cols.size(), std::move(s.pivot_cols)};
}

std::size_t rank(const ExactMatrix& m) { return reduce(m, m.cols()).pivot_cols.size(); }

std::vector<Vec> nullspace(const ExactMatrix& m) {
    EchelonScratch s = reduce(m, m.cols());
    return nullspace_from_echelon(s, m.tag(), m.cols());
}

AffineSolveResult solve_affine(const ExactMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw ShapeMismatch("rhs length does not match row count");
    ExactMatrix aug(m.tag(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    EchelonScratch s = reduce(aug, m.cols());
    std::size_t r_main = s.pivot_cols.size();

    // Any leftover nonzero in the augmented column below the pivots means
    // rank [M|b] = rank M + 1.
    bool aug_pivot = false;
    for (std::size_t row = r_main; row < m.rows(); ++row)
        if (!s.r.at(row, m.cols()).is_zero()) aug_pivot = true;

    AffineSolveResult out{std::nullopt, {}, r_main, r_main + (aug_pivot ? 1 : 0)};
    if (aug_pivot) return out;

    Vec particular(m.cols(), Scalar::zero(m.tag()));
    for (std::size_t p = 0; p < s.pivot_cols.size(); ++p) particular[s.pivot_cols[p]] = s.r.at(p, m.cols());
    out.particular = std::move(particular);
    out.nullspace_basis = nullspace_from_echelon(s, m.tag(), m.cols());
    return out;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("inverse of a non-square matrix");
    std::size_t n = m.rows();
    ExactMatrix aug = hstack(m, ExactMatrix::identity(m.tag(), n));
    EchelonScratch s = reduce(aug, n);
    if (s.pivot_cols.size() != n) return std::nullopt;
    ExactMatrix inv(m.tag(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = s.r.at(r, n + c);
    return inv;
}

ExactMatrix block_compose(const ExactMatrix& b11, const ExactMatrix& b12,
                          const ExactMatrix& b21, const ExactMatrix& b22) {
    if (b11.tag() != b12.tag() || b11.tag() != b21.tag() || b11.tag() != b22.tag())
        throw FieldMismatch("block fields differ");
    if (b11.rows() != b12.rows() || b21.rows() != b22.rows() ||
        b11.cols() != b21.cols() || b12.cols() != b22.cols())
        throw NonConformalBlocks("2x2 block dimensions do not conform");
    std::size_t rows = b11.rows() + b21.rows();
    std::size_t cols = b11.cols() + b12.cols();
    ExactMatrix out(b11.tag(), rows, cols);
    auto place = [&](const ExactMatrix& blk, std::size_t r0, std::size_t c0) {
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c) out.at(r0 + r, c0 + c) = blk.at(r, c);
    };
    place(b11, 0, 0);
    place(b12, 0, b11.cols());
    place(b21, b11.rows(), 0);
    place(b22, b11.rows(), b11.cols());
    return out;
}

Blocks2x2 block_extract(const ExactMatrix& m, std::size_t row_split, std::size_t col_split) {
    if (row_split > m.rows() || col_split > m.cols())
        throw NonConformalBlocks("split exceeds matrix dimensions");
    auto slice = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
        ExactMatrix blk(m.tag(), r1 - r0, c1 - c0);
        for (std::size_t r = r0; r < r1; ++r)
            for (std::size_t c = c0; c < c1; ++c) blk.at(r - r0, c - c0) = m.at(r, c);
        return blk;
    };
    return Blocks2x2{slice(0, row_split, 0, col_split),
                     slice(0, row_split, col_split, m.cols()),
                     slice(row_split, m.rows(), 0, col_split),
                     slice(row_split, m.rows(), col_split, m.cols())};
}

std::string serialize_matrix(const ExactMatrix& m) {
    std::ostringstream out;
    out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
    if (m.cols() == 0) return out.str();  // zero-column rows carry no lines
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0) out << ' ';
            out << m.at(r, c).to_string();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

ExactMatrix parse_matrix(const FieldTag& tag, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto next_tokens = [&](std::vector<std::string>& toks) {
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            toks = split_ws(line);
            if (!toks.empty()) return true;
        }
        return false;
    };
    std::vector<std::string> toks;
    if (!next_tokens(toks) || toks.size() != 3 || toks[0] != "matrix")
        throw SyntaxError("expected 'matrix <rows> <cols>'", lineno == 0 ? 1 : lineno, 1);
    std::size_t rows, cols;
    try {
        rows = std::stoull(toks[1]);
        cols = std::stoull(toks[2]);
    } catch (const std::exception&) {
        throw SyntaxError("malformed matrix dimensions", lineno, 1);
    }
    ExactMatrix m(tag, rows, cols);
    for (std::size_t r = 0; r < rows && cols > 0; ++r) {
        if (!next_tokens(toks)) throw SyntaxError("missing matrix row", lineno + 1, 1);
        if (toks.size() != cols)
            throw ShapeMismatch("line " + std::to_string(lineno) + ": expected " + std::to_string(cols) +
                                " entries, got " + std::to_string(toks.size()));
        for (std::size_t c = 0; c < cols; ++c) {
            try {
                m.at(r, c) = Scalar::parse(tag, toks[c]);
            } catch (const Error& e) {
                throw SyntaxError(e.what(), lineno, c + 1);
            }
        }
    }
    if (next_tokens(toks)) throw SyntaxError("unexpected trailing content", lineno, 1);
    return m;
}

Vec matvec(const ExactMatrix& m, const Vec& x) {
    if (x.size() != m.cols()) throw ShapeMismatch("vector length does not match column count");
    Vec out(m.rows(), Scalar::zero(m.tag()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.at(r, c).is_zero() || x[c].is_zero()) continue;
            out[r] += m.at(r, c) * x[c];
        }
    return out;
}

ExactMatrix hstack(const ExactMatrix& left, const ExactMatrix& right) {
    require_same_tag(left, right);
    if (left.rows() != right.rows()) throw ShapeMismatch("hstack row counts differ");
    ExactMatrix out(left.tag(), left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) out.at(r, c) = left.at(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) out.at(r, left.cols() + c) = right.at(r, c);
    }
    return out;
}

ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom) {
    require_same_tag(top, bottom);
    if (top.cols() != bottom.cols()) throw ShapeMismatch("vstack column counts differ");
    ExactMatrix out(top.tag(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out.at(r, c) = top.at(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < bottom.cols(); ++c) out.at(top.rows() + r, c) = bottom.at(r, c);
    return out;
}

}  // namespace starsylv
