#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "kostant/rational.hpp"

namespace kostant {

/// Polynomial with integer coefficients in one variable. Coefficients are
/// stored lowest degree first with no trailing zeros, so the zero polynomial
/// has an empty coefficient vector and degree -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> c) : c_(c) { trim(); }
  explicit IntPolynomial(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }

  static IntPolynomial constant(std::int64_t a) { return IntPolynomial(std::vector<std::int64_t>{a}); }
  static IntPolynomial monomial(int deg, std::int64_t a = 1) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1, 0);
    c.back() = a;
    return IntPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
  }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  bool has_nonnegative_coefficients() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t a) { return a >= 0; });
  }

  /// The palindromicity test c_i == c_{deg-i}. The zero polynomial counts as
  /// palindromic.
  bool is_palindromic() const {
    for (std::size_t i = 0, j = c_.size(); i < j; ++i) {
      --j;
      if (c_[i] != c_[j]) return false;
    }
    return true;
  }

  void add_to_coeff(int i, std::int64_t a) {
    if (i < 0) throw DomainError("negative exponent in IntPolynomial");
    if (static_cast<std::size_t>(i) >= c_.size()) c_.resize(static_cast<std::size_t>(i) + 1, 0);
    c_[static_cast<std::size_t>(i)] = detail::checked_add(c_[static_cast<std::size_t>(i)], a);
    trim();
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), 0);
    for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] = detail::checked_add(a.c_[i], b.c_[i]);
    a.trim();
    return a;
  }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = detail::checked_add(c[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
    return IntPolynomial(std::move(c));
  }
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human readable form such as "1+t+2t^2"; the zero polynomial prints "0".
  std::string str(char var = 't') const;

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

/// Laurent polynomial in v with integer coefficients, stored as a dense
/// window [lo, lo + size). Used by the Hecke-module canonical basis.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exp, std::int64_t a = 1) {
    LaurentPolynomial p;
    if (a != 0) {
      p.lo_ = exp;
      p.c_.push_back(a);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int low_degree() const { return lo_; }
  int high_degree() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int e) const {
    const int k = e - lo_;
    return (k < 0 || k >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(k)];
  }

  void add_monomial(int e, std::int64_t a);
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Multiply by v^k.
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
  }

  /// The bar involution v -> v^{-1}.
  LaurentPolynomial bar() const;

  bool is_bar_invariant() const { return *this == bar(); }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.lo_ == b.lo_);
  }

  std::string str() const;

private:
  void normalize();

  int lo_ = 0;
  std::vector<std::int64_t> c_;
};

}  // namespace kostant
