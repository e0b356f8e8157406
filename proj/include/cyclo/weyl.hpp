#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyclo/params.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// Weyl algebra D(Rep(Q, delta)) in l variables, normal order t^a d^c.

struct WeylMonom {
  IntVec a, c;  // exponents of t and of the derivative, componentwise >= 0
  auto operator<=>(const WeylMonom&) const = default;
};

class WeylElement {
 public:
  explicit WeylElement(int rank) : rank_(rank) { check_rank(rank); }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<WeylMonom, Rat>& terms() const { return terms_; }

  void add_term(const WeylMonom& m, const Rat& coeff);

  static WeylElement one(int rank);
  static WeylElement t(int rank, int i, int power = 1);
  static WeylElement d(int rank, int i, int power = 1);
  static WeylElement monomial(int rank, IntVec a, IntVec c, Rat coeff = Rat(1));

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rat& c);
  friend WeylElement operator+(WeylElement x, const WeylElement& y) { return x += y; }
  friend WeylElement operator-(WeylElement x, const WeylElement& y) { return x -= y; }
  bool operator==(const WeylElement& o) const = default;

  // Max total derivative degree across terms; -1 for zero.
  int order() const;

 private:
  int rank_;
  std::map<WeylMonom, Rat> terms_;
};

// Exact product in normal order; per variable
// d^c t^a = sum_k k! C(c,k) C(a,k) t^{a-k} d^{c-k}.
WeylElement weyl_multiply(const WeylElement& x, const WeylElement& y);
WeylElement weyl_power(const WeylElement& x, int n);

// ---------------------------------------------------------------------------
// Commutative side: C[mu^{-1}(0)] with canonical monomials
// u^s t^a xi^c, a_i c_i = 0, u = class of t_0 xi_0.

struct CommMonomial {
  int s = 0;
  IntVec a, c;
  auto operator<=>(const CommMonomial&) const = default;
  int rank() const { return static_cast<int>(a.size()); }
  std::pair<int, int> bidegree() const;  // (s + sum a, s + sum c)
};

// Canonicalizes raw exponents (extracts inverse pairs into s).
CommMonomial comm_canonicalize(int s, IntVec a, IntVec c);
CommMonomial comm_multiply(const CommMonomial& x, const CommMonomial& y);

using CommPoly = std::map<CommMonomial, Rat>;
void comm_add_term(CommPoly& p, const CommMonomial& m, const Rat& coeff);
CommPoly comm_multiply(const CommPoly& x, const CommPoly& y);

// Evaluation at a point of the open patch a_i != 0, b_i = p / a_i.
Rat comm_eval(const CommMonomial& m, const RatVec& a, const Rat& p);

// ---------------------------------------------------------------------------
// GL(delta) weights. weight(t_i) = eps_{i-1} - eps_i, weight(xi_i) =
// weight(d_i) = eps_i - eps_{i-1}.

IntVec gl_weight(const WeylMonom& m);
IntVec gl_weight(const CommMonomial& m);
// Throws unless x has a single term (monomial input required).
IntVec gl_weight(const WeylElement& x);

// Top-order part with d_i -> xi_i, reduced to canonical form. Throws on zero.
CommPoly weyl_symbol(const WeylElement& x);

// ---------------------------------------------------------------------------
// Semi-invariant enumeration.

struct Bidegree {
  int t = 0, xi = 0;
};

// All canonical monomials of GL-weight w with bidegree <= cap componentwise.
// They are exactly u^s times the canonical split of the shift vector
// m(k)_i = k + (w_0 + ... + w_{i-1}).
std::vector<CommMonomial> semi_invariant_basis(const IntVec& w, Bidegree cap);

// Canonical monomial with net t-exponent vector m (positive entries to a,
// negative to c), times u^s.
CommMonomial monomial_from_shift(const IntVec& m, int s = 0);

// Shift vector m(k) for weight w at parameter k.
IntVec shift_for_weight(const IntVec& w, int k);

// Basis of the quotient by multiplication with t_0...t_{l-1}: canonical
// monomials in `basis` not hit by cycle * (another canonical monomial). The
// complement is taken bidegree by bidegree; multiplication by the cycle is
// injective, so on a monomial basis this is an exact set difference.
std::vector<CommMonomial> quotient_basis_mod_cycle(
    const std::vector<CommMonomial>& basis);

// Brute-force oracle: enumerate ALL raw monomials t^a xi^c with bidegree <=
// cap, filter by weight, canonicalize, dedupe.
std::vector<CommMonomial> semi_invariant_basis_bruteforce(const IntVec& w,
                                                          Bidegree cap);

// ---------------------------------------------------------------------------
// Laurent monomials (charts, f-monomials): signed exponents.

struct LaurentMonomial {
  IntVec texp, xexp;
  int rank() const { return static_cast<int>(texp.size()); }
  static LaurentMonomial one(int rank) { return {IntVec(rank, 0), IntVec(rank, 0)}; }
  LaurentMonomial operator*(const LaurentMonomial& o) const;
  LaurentMonomial inverse() const;
  // (q, t) bidegree: (sum texp, sum xexp).
  std::pair<int, int> qt_degree() const;
  int specialized_degree() const;  // sum texp - sum xexp
  bool operator==(const LaurentMonomial& o) const = default;
};

IntVec gl_weight(const LaurentMonomial& m);
// Throws if any exponent is negative.
CommMonomial laurent_to_comm(const LaurentMonomial& m);

}  // namespace cyclo
