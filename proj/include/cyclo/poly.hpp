#pragma once

#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

// Dense univariate polynomial over Q, coefficients low degree first.
// The zero polynomial is the empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c);
  static Poly variable();              // z
  static Poly linear(Rat c);           // z + c
  static Poly monomial(int d, Rat c);  // c z^d

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& coeff(int d) const;
  Rat leading() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  Rat eval(const Rat& x) const;
  Poly shifted(const Rat& c) const;  // P(z + c)

  const std::vector<Rat>& coeffs() const { return coeffs_; }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace cyclo
