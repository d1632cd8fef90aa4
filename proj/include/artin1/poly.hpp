#pragma once

// Dense univariate polynomials over F_p (coefficients ascending, normalized so
// the leading coefficient is nonzero; the zero polynomial has no coefficients).
// Only what the pencil machinery needs: ring ops, evaluation over F_p or
// F_{p^2}, exact division by monic factors, valuations, and the degree-window
// reversal used to move between the t = 0 and t = infinity charts.

#include <cstdint>
#include <vector>

#include "artin1/field.hpp"

namespace artin1 {

class Poly {
 public:
  Poly() = default;
  Poly(uint32_t p, std::vector<uint32_t> ascending_coeffs);
  static Poly zero(uint32_t p) { return Poly(p, {}); }
  // Builds c * t^k.
  static Poly monomial(uint32_t p, uint32_t c, uint32_t k);

  uint32_t p() const { return p_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  uint32_t coeff(uint32_t k) const { return k < c_.size() ? c_[k] : 0; }

  Poly add(const Poly& o) const;
  Poly sub(const Poly& o) const;
  Poly mul(const Poly& o) const;
  Poly scale(uint32_t c) const;

  // Horner evaluation in F (degree 1 or 2 over the same p); coefficients embed.
  Fe eval(const Field& F, const Fe& t) const;

  // Quotient and remainder by a monic divisor.
  std::pair<Poly, Poly> divmod_monic(const Poly& monic) const;
  // Exact division (errors with Internal if the remainder is nonzero).
  Poly exact_div(const Poly& monic) const;
  // Largest v with monic^v dividing this; a large sentinel for the zero polynomial.
  int valuation(const Poly& monic) const;

  // t^window * f(1/t): coefficient reversal within a fixed degree window.
  // Errors with BadInput when degree() > window.
  Poly reverse_window(uint32_t window) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void normalize();
  uint32_t p_ = 0;
  std::vector<uint32_t> c_;
};

// Valuation sentinel for the zero polynomial (acts as +infinity).
inline constexpr int kValInfinity = 1 << 20;

}  // namespace artin1
