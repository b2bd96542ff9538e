#include "verify/poly.hpp"

#include <algorithm>

namespace verify {

void PolyZ::trim() {
  size_t begin = 0;
  while (begin < c_.size() && c_[begin] == 0) ++begin;
  size_t end = c_.size();
  while (end > begin && c_[end - 1] == 0) --end;
  if (begin == end) {
    c_.clear();
    lo_ = 0;
    return;
  }
  if (begin > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(begin));
    lo_ += static_cast<long long>(begin);
  }
  c_.resize(end - begin);
}

PolyZ PolyZ::monomial(long long coeff, long long exp) {
  PolyZ p;
  if (coeff != 0) {
    p.lo_ = exp;
    p.c_ = {coeff};
  }
  return p;
}

long long PolyZ::lo() const {
  require(!is_zero(), "lo() of zero polynomial");
  return lo_;
}

long long PolyZ::hi() const {
  require(!is_zero(), "hi() of zero polynomial");
  return lo_ + static_cast<long long>(c_.size()) - 1;
}

long long PolyZ::coeff(long long exp) const {
  if (is_zero()) return 0;
  long long idx = exp - lo_;
  if (idx < 0 || idx >= static_cast<long long>(c_.size())) return 0;
  return c_[static_cast<size_t>(idx)];
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long long nlo = std::min(lo_, o.lo_);
  long long nhi = std::max(hi(), o.hi());
  PolyZ r;
  r.lo_ = nlo;
  r.c_.assign(static_cast<size_t>(nhi - nlo + 1), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    r.c_[static_cast<size_t>(lo_ - nlo) + i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) {
    auto& slot = r.c_[static_cast<size_t>(o.lo_ - nlo) + i];
    slot = checked_add(slot, o.c_[i]);
  }
  r.trim();
  return r;
}

PolyZ PolyZ::operator-() const {
  PolyZ r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

PolyZ PolyZ::operator-(const PolyZ& o) const { return *this + (-o); }

PolyZ PolyZ::operator*(const PolyZ& o) const {
  if (is_zero() || o.is_zero()) return PolyZ();
  PolyZ r;
  r.lo_ = lo_ + o.lo_;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(c_[i], o.c_[j]));
    }
  }
  r.trim();
  return r;
}

bool PolyZ::operator==(const PolyZ& o) const {
  return lo_ == o.lo_ && c_ == o.c_;
}

PolyZ PolyZ::reversed() const {
  if (is_zero()) return PolyZ();
  PolyZ r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -hi();
  return r;
}

PolyZ PolyZ::shifted(long long k) const {
  if (is_zero()) return PolyZ();
  PolyZ r = *this;
  r.lo_ += k;
  return r;
}

PolyZ PolyZ::stretched(long long k) const {
  require(k >= 1, "stretched() needs k >= 1");
  if (is_zero()) return PolyZ();
  PolyZ r;
  r.lo_ = lo_ * k;
  r.c_.assign(static_cast<size_t>((c_.size() - 1) * k + 1), 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(k)] = c_[i];
  return r;
}

PolyZ PolyZ::halved() const {
  if (is_zero()) return PolyZ();
  PolyZ r;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long long e = lo_ + static_cast<long long>(i);
    require(e % 2 == 0, "halved() on polynomial with odd exponent " + std::to_string(e));
    r += monomial(c_[i], e / 2);
  }
  return r;
}

PolyZ PolyZ::low_part(long long bound) const {
  PolyZ r;
  for (size_t i = 0; i < c_.size(); ++i) {
    long long e = lo_ + static_cast<long long>(i);
    if (e < bound && c_[i] != 0) r += monomial(c_[i], e);
  }
  return r;
}

PolyZ PolyZ::window(long long lo, long long hi) const {
  PolyZ r;
  for (size_t i = 0; i < c_.size(); ++i) {
    long long e = lo_ + static_cast<long long>(i);
    if (e >= lo && e <= hi && c_[i] != 0) r += monomial(c_[i], e);
  }
  return r;
}

long long PolyZ::eval_int(long long x) const {
  if (is_zero()) return 0;
  require(lo_ >= 0 || x == 1 || x == -1,
          "eval_int at non-unit requires non-negative exponents");
  long long acc = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    long long e = lo_ + static_cast<long long>(i);
    long long pw = 1;
    if (x == 1) {
      pw = 1;
    } else if (x == -1) {
      pw = (e % 2 == 0) ? 1 : -1;
    } else {
      for (long long k = 0; k < e; ++k) pw = checked_mul(pw, x);
    }
    acc = checked_add(acc, checked_mul(c_[i], pw));
  }
  return acc;
}

bool PolyZ::all_coeffs_nonneg() const {
  for (long long x : c_)
    if (x < 0) return false;
  return true;
}

std::string PolyZ::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    long long a = c_[i];
    if (a == 0) continue;
    long long e = lo_ + static_cast<long long>(i);
    bool first = out.empty();
    if (first) {
      if (a < 0) out += "-";
    } else {
      out += (a < 0) ? " - " : " + ";
    }
    long long mag = a < 0 ? -a : a;
    if (e == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += (e == 1) ? "q" : "q^" + std::to_string(e);
    }
  }
  return out;
}

std::vector<std::pair<long long, long long>> PolyZ::terms() const {
  std::vector<std::pair<long long, long long>> t;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) t.emplace_back(c_[i], lo_ + static_cast<long long>(i));
  return t;
}

PolyZ PolyZ::from_terms(const std::vector<std::pair<long long, long long>>& t) {
  PolyZ p;
  for (auto& [c, e] : t) p += monomial(c, e);
  return p;
}

}  // namespace verify
