#include "posetpoly/fpoly.hpp"

#include <algorithm>
#include <limits>

#include "posetpoly/errors.hpp"

namespace posetpoly {

namespace {

FPoly::Coeff add_checked(FPoly::Coeff a, FPoly::Coeff b) {
  FPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("f-polynomial coefficient overflow");
  return r;
}

FPoly::Coeff mul_checked(FPoly::Coeff a, FPoly::Coeff b) {
  FPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("f-polynomial coefficient overflow");
  return r;
}

}  // namespace

FPoly::FPoly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

FPoly::FPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

void FPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FPoly FPoly::monomial(int degree, Coeff c) {
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return FPoly(std::move(v));
}

FPoly FPoly::one_plus_x_pow(int n) {
  FPoly out{1};
  const FPoly step{1, 1};
  for (int k = 0; k < n; ++k) out = out * step;
  return out;
}

int FPoly::min_degree() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

FPoly::Coeff FPoly::at_one() const {
  Coeff s = 0;
  for (auto c : c_) s = add_checked(s, c);
  return s;
}

std::int64_t FPoly::at_minus_one() const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const auto v = static_cast<std::int64_t>(c_[k]);
    s += (k % 2 == 0) ? v : -v;
  }
  return s;
}

FPoly& FPoly::operator+=(const FPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = add_checked(c_[k], o.c_[k]);
  trim();
  return *this;
}

FPoly operator*(const FPoly& a, const FPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FPoly::Coeff> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] = add_checked(out[i + j], mul_checked(a.c_[i], b.c_[j]));
    }
  }
  return FPoly(std::move(out));
}

std::string FPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0 || c_[k] != 1) out += std::to_string(c_[k]);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

bool leq(const FPoly& a, const FPoly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

FPoly divx(const FPoly& f) {
  if (f[0] != 0) {
    throw ConstantTermError("cannot divide " + f.to_string() + " by x");
  }
  if (f.is_zero()) return {};
  return FPoly(std::vector<FPoly::Coeff>(f.coeffs().begin() + 1, f.coeffs().end()));
}

FPoly mulx(const FPoly& f) {
  if (f.is_zero()) return {};
  std::vector<FPoly::Coeff> v{0};
  v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return FPoly(std::move(v));
}

FPoly checked_sub(const FPoly& a, const FPoly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<FPoly::Coeff> out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (b[k] > a[k]) {
      throw NegativeCoefficientError("(" + a.to_string() + ") - (" + b.to_string() +
                                     ") has a negative coefficient at x^" +
                                     std::to_string(k));
    }
    out[k] = a[k] - b[k];
  }
  return FPoly(std::move(out));
}

std::vector<std::int64_t> signed_difference(const FPoly& b, const FPoly& a) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<std::int64_t> out(n, 0);
  constexpr auto kMax = static_cast<FPoly::Coeff>(std::numeric_limits<std::int64_t>::max());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] > kMax || b[k] > kMax) throw OverflowError("slack does not fit in int64");
    out[k] = static_cast<std::int64_t>(b[k]) - static_cast<std::int64_t>(a[k]);
  }
  return out;
}

FPoly subdirect(const FPoly& f0p, const FPoly& f1p, const FPoly& f0q, const FPoly& f1q) {
  return divx(f0p * f0q) + f1p * f1q;
}

FPoly product(const FPoly& fp, const FPoly& fq) {
  const FPoly one{1};
  return one + divx(checked_sub(fp, one) * checked_sub(fq, one));
}

FPoly join(const FPoly& fr, const FPoly& fs) { return fr * fs; }

FPoly pyramid(const FPoly& f) { return f * FPoly{1, 1}; }

}  // namespace posetpoly
