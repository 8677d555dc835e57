#include "chainforge/gf2.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "chainforge/errors.hpp"
#include "chainforge/text_format.hpp"

namespace chainforge {

GF2Matrix::GF2Matrix(std::size_t n) : n_(n), stride_((n + 63) / 64), words_(n * stride_, 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::string>& rows) {
    GF2Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("gf2 matrix rows must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            char ch = rows[i][j];
            if (ch != '0' && ch != '1') throw std::invalid_argument("gf2 matrix entries must be 0 or 1");
            m.set(i, j, ch == '1');
        }
    }
    return m;
}

GF2Matrix GF2Matrix::random_nonsingular(std::size_t n, std::mt19937_64& rng) {
    GF2Matrix m(n);
    do {
        for (auto& w : m.words_) w = rng();
        if (n % 64 != 0) {
            const std::uint64_t mask = (std::uint64_t{1} << (n % 64)) - 1;
            for (std::size_t i = 0; i < n; ++i) m.words_[i * m.stride_ + m.stride_ - 1] &= mask;
        }
    } while (!m.nonsingular());
    return m;
}

void GF2Matrix::set(std::size_t row, std::size_t col, bool value) {
    std::uint64_t& w = words_[row * stride_ + col / 64];
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    w = value ? (w | bit) : (w & ~bit);
}

void GF2Matrix::add_row(std::size_t src, std::size_t dst) {
    for (std::size_t k = 0; k < stride_; ++k) words_[dst * stride_ + k] ^= words_[src * stride_ + k];
}

void GF2Matrix::swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < stride_; ++k) std::swap(words_[a * stride_ + k], words_[b * stride_ + k]);
}

std::size_t GF2Matrix::rank() const {
    GF2Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n_ && r < n_; ++col) {
        std::size_t pivot = r;
        while (pivot < n_ && !m.get(pivot, col)) ++pivot;
        if (pivot == n_) continue;
        m.swap_rows(pivot, r);
        for (std::size_t i = r + 1; i < n_; ++i) {
            if (m.get(i, col)) m.add_row(r, i);
        }
        ++r;
    }
    return r;
}

GF2Matrix GF2Matrix::inverse() const {
    GF2Matrix m = *this;
    GF2Matrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && !m.get(pivot, col)) ++pivot;
        if (pivot == n_) throw SingularMatrixError("matrix is singular over GF(2)");
        m.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
        for (std::size_t i = 0; i < n_; ++i) {
            if (i != col && m.get(i, col)) {
                m.add_row(col, i);
                inv.add_row(col, i);
            }
        }
    }
    return inv;
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (get(i, j)) t.set(j, i, true);
        }
    }
    return t;
}

std::vector<std::uint8_t> GF2Matrix::apply(const std::vector<std::uint8_t>& x) const {
    if (x.size() != n_) throw std::invalid_argument("vector length does not match matrix size");
    std::vector<std::uint8_t> y(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        std::uint8_t acc = 0;
        for (std::size_t j = 0; j < n_; ++j) acc ^= static_cast<std::uint8_t>(get(i, j) & (x[j] & 1U));
        y[i] = acc;
    }
    return y;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("gf2 product of mismatched sizes");
    GF2Matrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        for (std::size_t k = 0; k < a.n_; ++k) {
            if (!a.get(i, k)) continue;
            for (std::size_t w = 0; w < a.stride_; ++w) c.words_[i * c.stride_ + w] ^= b.words_[k * b.stride_ + w];
        }
    }
    return c;
}

std::string GF2Matrix::row_string(std::size_t row) const {
    std::string s(n_, '0');
    for (std::size_t j = 0; j < n_; ++j) {
        if (get(row, j)) s[j] = '1';
    }
    return s;
}

GF2Matrix parse_gf2_matrix(std::string_view text) {
    auto directives = tokenize(text);
    if (directives.empty()) throw ParseError(0, "empty matrix text: expected 'gf2 N'");
    const Directive& head = directives.front();
    if (head.tokens[0] != "gf2") throw ParseError(head.line, "expected 'gf2 N'");
    expect_arity(head, 2);
    const std::size_t n = parse_count(head.tokens[1], head.line);
    if (n == 0) throw ParseError(head.line, "matrix size must be positive");
    if (directives.size() != n + 1) {
        std::size_t line = directives.size() > n + 1 ? directives[n + 1].line : directives.back().line;
        throw ParseError(line, "expected " + std::to_string(n) + " matrix rows, got " + std::to_string(directives.size() - 1));
    }
    GF2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Directive& d = directives[i + 1];
        if (d.tokens.size() != 1 || d.tokens[0].size() != n) {
            throw ParseError(d.line, "matrix row must be " + std::to_string(n) + " characters from {0,1}");
        }
        for (std::size_t j = 0; j < n; ++j) {
            char ch = d.tokens[0][j];
            if (ch != '0' && ch != '1') throw ParseError(d.line, std::string("bad matrix entry '") + ch + "'");
            m.set(i, j, ch == '1');
        }
    }
    return m;
}

std::string emit_gf2_matrix(const GF2Matrix& m) {
    std::ostringstream out;
    out << "gf2 " << m.size() << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) out << m.row_string(i) << '\n';
    return out.str();
}

}  // namespace chainforge
