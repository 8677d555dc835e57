#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace chainforge {

/// Square matrix over GF(2) with bit-packed rows. Row i, column j is bit j of row i.
class GF2Matrix {
public:
    explicit GF2Matrix(std::size_t n);
    static GF2Matrix identity(std::size_t n);
    /// Rows given as strings of '0'/'1', e.g. {"01", "10"}.
    static GF2Matrix from_rows(const std::vector<std::string>& rows);
    /// Uniformly random nonsingular matrix by rejection sampling.
    static GF2Matrix random_nonsingular(std::size_t n, std::mt19937_64& rng);

    std::size_t size() const noexcept { return n_; }
    bool get(std::size_t row, std::size_t col) const {
        return (words_[row * stride_ + col / 64] >> (col % 64)) & 1U;
    }
    void set(std::size_t row, std::size_t col, bool value);
    void flip(std::size_t row, std::size_t col) { words_[row * stride_ + col / 64] ^= std::uint64_t{1} << (col % 64); }

    /// row[dst] ^= row[src]
    void add_row(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t rank() const;
    bool nonsingular() const { return rank() == n_; }
    /// Throws SingularMatrixError.
    GF2Matrix inverse() const;
    GF2Matrix transpose() const;

    /// Matrix-vector product; `x` holds one bit per entry.
    std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& x) const;

    friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

    std::string row_string(std::size_t row) const;

private:
    std::size_t n_;
    std::size_t stride_;
    std::vector<std::uint64_t> words_;
};

// Matrix file format: `gf2 N` then N rows of N characters from {0,1}.
GF2Matrix parse_gf2_matrix(std::string_view text);
std::string emit_gf2_matrix(const GF2Matrix& m);

}  // namespace chainforge
