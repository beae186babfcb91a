#include "kostant/polynomial.hpp"

#include <sstream>

namespace kostant {

std::string IntPolynomial::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const std::int64_t a = c_[i];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? "+" : "-");
    else if (a < 0) os << "-";
    first = false;
    const std::int64_t m = a < 0 ? -a : a;
    if (i == 0 || m != 1) os << m;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

void LaurentPolynomial::add_monomial(int e, std::int64_t a) {
  if (a == 0) return;
  if (c_.empty()) {
    lo_ = e;
    c_.push_back(a);
    return;
  }
  if (e < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - e), 0);
    lo_ = e;
  }
  const auto k = static_cast<std::size_t>(e - lo_);
  if (k >= c_.size()) c_.resize(k + 1, 0);
  c_[k] = detail::checked_add(c_[k], a);
  normalize();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  const int lo = std::min(lo_, o.lo_);
  const int hi = std::max(high_degree(), o.high_degree());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[static_cast<std::size_t>(lo_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& slot = c[static_cast<std::size_t>(o.lo_ - lo) + i];
    slot = detail::checked_add(slot, o.c_[i]);
  }
  lo_ = lo;
  c_ = std::move(c);
  normalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  LaurentPolynomial neg = o;
  for (auto& a : neg.c_) a = -a;
  return *this += neg;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = detail::checked_add(r.c_[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
  r.normalize();
  return r;
}

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial r;
  if (c_.empty()) return r;
  r.lo_ = -high_degree();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

void LaurentPolynomial::normalize() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  if (first > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<int>(first);
  }
  while (c_.back() == 0) c_.pop_back();
}

std::string LaurentPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const std::int64_t a = c_[i];
    if (a == 0) continue;
    const int e = lo_ + static_cast<int>(i);
    if (!first) os << (a > 0 ? "+" : "-");
    else if (a < 0) os << "-";
    first = false;
    const std::int64_t m = a < 0 ? -a : a;
    if (e == 0 || m != 1) os << m;
    if (e != 0) os << 'v';
    if (e != 0 && e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace kostant
