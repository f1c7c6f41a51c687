#include "tga/linalg.hpp"

#include <algorithm>
#include <tuple>

#include "tga/error.hpp"
#include "tga/kernels.hpp"

namespace tga {

PrimeMatrix::PrimeMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

PrimeMatrix PrimeMatrix::identity(std::size_t n, std::uint32_t p) {
  PrimeMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void PrimeMatrix::set_column(std::size_t c, std::span<const std::uint32_t> values) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

PrimeVector PrimeMatrix::apply(std::span<const std::uint32_t> v) const {
  PrimeVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * v[c]) % p_;
    out[r] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

PrimeMatrix operator*(const PrimeMatrix& a, const PrimeMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) throw Error(ErrorCode::PreconditionFailed, "matrix shape mismatch");
  PrimeMatrix out(a.rows_, b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const std::uint32_t f = a(i, l);
      if (f != 0) kernels::axpy_mod(out.row(i), b.row(l), f, a.p_);
    }
  }
  return out;
}

bool PrimeMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero mod p");
  std::int64_t old_r = a % p, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return static_cast<std::uint32_t>(((old_s % p) + p) % p);
}

RowEchelon rref(PrimeMatrix m) {
  const std::uint32_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      auto a = m.row(piv);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    kernels::scale_mod(m.row(r), inv_mod(m(r, c), p), p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const std::uint32_t f = m(i, c);
      if (f != 0) kernels::axpy_mod(m.row(i), m.row(r), p - f, p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const PrimeMatrix& m) { return rref(m).pivots.size(); }

std::vector<PrimeVector> kernel_basis(const PrimeMatrix& m) {
  const std::uint32_t p = m.modulus();
  const auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<PrimeVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    PrimeVector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      const std::uint32_t e = ech.reduced(i, f);
      v[ech.pivots[i]] = e == 0 ? 0 : p - e;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<PrimeVector> solve(const PrimeMatrix& a, std::span<const std::uint32_t> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::PreconditionFailed, "right-hand side length mismatch");
  PrimeMatrix aug(a.rows(), a.cols() + 1, a.modulus());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto src = a.row(r);
    std::copy(src.begin(), src.end(), aug.row(r).begin());
    aug(r, a.cols()) = b[r];
  }
  const auto ech = rref(std::move(aug));
  PrimeVector x(a.cols(), 0);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == a.cols()) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced(i, a.cols());
  }
  return x;
}

PrimeMatrix matrix_power(const PrimeMatrix& m, std::uint64_t e) {
  PrimeMatrix result = PrimeMatrix::identity(m.rows(), m.modulus());
  PrimeMatrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace tga
