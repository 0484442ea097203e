#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mac/field.hpp"

namespace mac {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<F> apply(const std::vector<F>& x) const {
    std::vector<F> y(rows_, F(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c)) && !is_zero(x[c])) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

template <class F>
struct Echelon {
  Matrix<F> r;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of row i
};

// Gauss-Jordan elimination to reduced row echelon form.
template <class F>
Echelon<F> rref(Matrix<F> a) {
  Echelon<F> e;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    F inv = F(1) / a(row, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(row, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, c))) continue;
      F f = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!is_zero(a(row, k))) a(i, k) -= f * a(row, k);
    }
    e.pivots.push_back(c);
    ++row;
  }
  e.r = std::move(a);
  return e;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return rref(a).pivots.size();
}

// Basis of {x : a x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& a) {
  Echelon<F> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> x(a.cols(), F(0));
    x[f] = F(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.r(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Some x with a x = b (free variables zero), or nothing.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon<F> e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<F> x(a.cols(), F(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.r(i, a.cols());
  return x;
}

// Incrementally maintained echelon basis of a subspace of F^n; answers membership.
template <class F>
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t n) : n_(n) {}

  std::size_t dim() const { return rows_.size(); }

  // Reduces v against the basis in place; returns true if v became zero.
  bool reduce(std::vector<F>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const F& c = v[piv_[i]];
      if (is_zero(c)) continue;
      F f = c;
      for (std::size_t k = 0; k < n_; ++k)
        if (!is_zero(rows_[i][k])) v[k] -= f * rows_[i][k];
    }
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  bool contains(std::vector<F> v) const { return reduce(v); }

  // Adds v; returns false if v was already in the span.
  bool insert(std::vector<F> v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (is_zero(v[p])) ++p;
    F inv = F(1) / v[p];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      if (is_zero(row[p])) continue;
      F f = row[p];
      for (std::size_t k = 0; k < n_; ++k)
        if (!is_zero(v[k])) row[k] -= f * v[k];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> piv_;
};

// Bit-packed F2 matrix; rows are contiguous runs of 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), a_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words() const { return words_; }
  bool get(std::size_t r, std::size_t c) const { return (a_[r * words_ + c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t m = std::uint64_t{1} << (c % 64);
    if (v) a_[r * words_ + c / 64] |= m;
    else a_[r * words_ + c / 64] &= ~m;
  }
  void flip(std::size_t r, std::size_t c) { a_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  std::uint64_t* row(std::size_t r) { return a_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return a_.data() + r * words_; }

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> a_;
};

// Rank over F2; destroys the input.
std::size_t rank_f2(BitMatrix& a);

inline std::size_t rank_f2(BitMatrix&& a) { return rank_f2(a); }

}  // namespace mac
