#pragma once

// Dense matrices over GF(p) and Gaussian elimination with first-nonzero pivoting.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tga {

using PrimeVector = std::vector<std::uint32_t>;

class PrimeMatrix {
 public:
  PrimeMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
  static PrimeMatrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void set_column(std::size_t c, std::span<const std::uint32_t> values);
  PrimeVector apply(std::span<const std::uint32_t> v) const;

  friend PrimeMatrix operator*(const PrimeMatrix& a, const PrimeMatrix& b);
  bool is_zero() const;
  bool operator==(const PrimeMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> data_;
};

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

struct RowEchelon {
  PrimeMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; pivot = first nonzero entry at or below the current row.
RowEchelon rref(PrimeMatrix m);
std::size_t rank(const PrimeMatrix& m);
/// One basis vector per free column (free variable = 1, other free variables = 0).
std::vector<PrimeVector> kernel_basis(const PrimeMatrix& m);
/// A solution with all free variables 0, if the system is consistent.
std::optional<PrimeVector> solve(const PrimeMatrix& a, std::span<const std::uint32_t> b);
PrimeMatrix matrix_power(const PrimeMatrix& m, std::uint64_t e);

}  // namespace tga
