#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace posetpoly {

// Polynomial in N[x]; coefficient k counts faces of dimension k - 1.
// Coefficients are exact 64-bit counts, every operation checks for overflow
// (OverflowError). Trailing zeros are always trimmed, so the zero polynomial
// has no coefficients.
class FPoly {
 public:
  using Coeff = std::uint64_t;

  FPoly() = default;
  FPoly(std::initializer_list<Coeff> coeffs);
  explicit FPoly(std::vector<Coeff> coeffs);

  static FPoly monomial(int degree, Coeff c = 1);
  // (1 + x)^n
  static FPoly one_plus_x_pow(int n);

  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Lowest degree with a nonzero coefficient, -1 for zero.
  int min_degree() const;

  // Value at x = 1 (total count) and at x = -1 (Euler characteristic test).
  Coeff at_one() const;
  std::int64_t at_minus_one() const;

  FPoly& operator+=(const FPoly& o);
  friend FPoly operator+(FPoly a, const FPoly& b) { return a += b; }
  friend FPoly operator*(const FPoly& a, const FPoly& b);

  bool operator==(const FPoly& o) const = default;

  // Human form such as "1 + 4x + 4x^2 + x^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Coeff> c_;
};

// Coefficient-wise a <= b.
bool leq(const FPoly& a, const FPoly& b);

// f / x; throws ConstantTermError when f(0) != 0.
FPoly divx(const FPoly& f);
FPoly mulx(const FPoly& f);

// a - b, throwing NegativeCoefficientError if any coefficient would go
// negative.
FPoly checked_sub(const FPoly& a, const FPoly& b);

// b - a coefficient-wise as signed values; reports slack of a <= b.
std::vector<std::int64_t> signed_difference(const FPoly& b, const FPoly& a);

// f of P v Q from the origin split of both sides: (1/x) f0P f0Q + f1P f1Q.
FPoly subdirect(const FPoly& f0p, const FPoly& f1p, const FPoly& f0q, const FPoly& f1q);

// f of the Cartesian product: 1 + (fP - 1)(fQ - 1) / x.
FPoly product(const FPoly& fp, const FPoly& fq);

// f of the join is the product of f-polynomials; a pyramid is the join with
// a point, whose f-polynomial is 1 + x.
FPoly join(const FPoly& fr, const FPoly& fs);
FPoly pyramid(const FPoly& f);

}  // namespace posetpoly
