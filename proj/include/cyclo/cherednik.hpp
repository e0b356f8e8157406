#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/params.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/series.hpp"
#include "cyclo/weyl.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// Elements of the induced module M(mu) = D(Rep) / sum_i D (iota(e^(i)) -
// mu_i), in normal form: finite sum of tau^m P_m(z), z the image of t_0 d_0.
// mu is the reduction vector (sum 0); columns of e_0 T_lambda use
// mu = lambda - eps_j for column j, the bimodule B uses lambda_bar.

class InducedElement {
 public:
  InducedElement(int rank, RatVec mu);

  int rank() const { return rank_; }
  const RatVec& mu() const { return mu_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IntVec, Poly>& terms() const { return terms_; }

  void add_term(const IntVec& shift, const Poly& p);
  InducedElement& operator+=(const InducedElement& o);
  InducedElement& operator-=(const InducedElement& o);
  InducedElement& operator*=(const Rat& c);
  bool operator==(const InducedElement& o) const;

  // GL-weight of a shift m is w_j = m_{j+1} - m_j; defined when all terms
  // agree (shifts differing by multiples of (1,...,1)).
  std::optional<IntVec> weight() const;

  // Adjoint degree sum(m) of the unique shift when homogeneous.
  std::optional<int> degree() const;

 private:
  int rank_;
  RatVec mu_;
  std::map<IntVec, Poly> terms_;
};

// Normal-form reduction: tau^m per slot, Euler factors t^c d^c =
// prod_j (Theta - j), then Theta_j -> z + mu_0 + ... + mu_{j-1}.
InducedElement reduce_to_induced(const WeylElement& x, const RatVec& mu);
// Deformation-parameter form: mu = lambda_bar.
InducedElement reduce_to_induced(const WeylElement& x, const DeformParam& lam);

// Canonical section: shift m -> tau^m, z^s -> (t_0 d_0)^s on the right.
WeylElement lift_induced(const InducedElement& v);

// x acting on the left; stays in M(mu).
InducedElement left_multiply(const WeylElement& x, const InducedElement& v);

// Right multiplication by a weight-homogeneous d maps M(mu) to
// M(mu - weight(d)).
InducedElement right_multiply(const InducedElement& v, const WeylElement& d);

// b tensor w -> b * w. Requires mu(b) = mu(w) + weight(w); the result lives
// in w's ambient at weight(b) + weight(w).
InducedElement theta_map(const InducedElement& b, const InducedElement& w);

// ---------------------------------------------------------------------------
// Column quotient e_* Delta_lambda(v): ambient M(lambda - eps_v) modulo the
// image of right multiplication by d_v. Each graded piece of the quotient is
// at most one-dimensional: the image at shift m is g_m(z) C[z] with
// deg g_m <= 1, and the class of tau^m P(z) is P(root of g_m).

class ColumnQuotient {
 public:
  ColumnQuotient(DeformParam lambda, int vertex);

  int rank() const { return lambda_.rank(); }
  int vertex() const { return vertex_; }
  const RatVec& mu() const { return mu_; }
  const DeformParam& lambda() const { return lambda_; }

  const Poly& image_generator(const IntVec& shift) const;
  int piece_dim(const IntVec& shift) const;  // 0 or 1

  // Per-shift class scalars of an element of M(lambda - eps_v); zero classes
  // dropped. Throws if the element's ambient mismatches.
  std::map<IntVec, Rat> class_components(const InducedElement& x) const;
  bool is_zero_in_quotient(const InducedElement& x) const;

 private:
  DeformParam lambda_;
  int vertex_;
  RatVec mu_;
  mutable std::map<IntVec, Poly> gen_cache_;
};

// Bottom vector of e_0 Delta_lambda(v): class of t_0 t_{l-1} ... t_{v+1}
// (empty product when v = 0), an InducedElement of weight tau_v in
// M(lambda - eps_v).
InducedElement column_cyclic_vector(const DeformParam& lambda, int vertex);

// ---------------------------------------------------------------------------
// Standard modules.

// kappa_i(p) for p = 1..p_max with A A^p 1 = A^{p+1} 1 and
// A* A^p 1 = kappa_i(p) A^{p-1} 1, derived from the realization.
RatVec standard_action(const DeformParam& lambda, int i, int p_max);

struct HomDim {
  int dim = 0;                // 0 or 1
  std::optional<int> p, n;    // embedding degree p = n l + ((j-i) mod l)
};
HomDim hom_dim(const DeformParam& lambda, int i, int j);
// Brute force via kappa zeros, scanning p <= depth with p = j - i mod l.
HomDim hom_dim_bruteforce(const DeformParam& lambda, int i, int j, int depth);

// Graded dimensions of e_0 Delta_lambda(i) for adjoint degrees in
// [-max_degree, max_degree], with the class root per nonzero degree.
std::map<int, int> standard_column_dims(const DeformParam& lambda, int i,
                                        int max_degree);

// Basis representative per nonzero degree <= max_degree (the class of the
// column monomial tau^m).
std::map<int, InducedElement> standard_column_basis(const DeformParam& lambda,
                                                    int i, int max_degree);

// ---------------------------------------------------------------------------
// Shift functor verification (images of standard modules).

struct ShiftImageOptions {
  int max_degree = 10;  // graded comparison window
  int order_bound = 8;  // derivative-order sweep bound for the B-basis
  int n_tail = 4;       // extra n values checked for k = l
};

struct CheckItem {
  std::string claim;
  bool pass = false;
  std::string witness;
};

struct ShiftImageRecord {
  int position = 0;            // i in 1..l
  int target_vertex = 0;       // eta_i
  IntVec eta;                  // eta_1..eta_l
  IntVec b;                    // b_1..b_{l-1} for theta
  int bottom_degree = 0;       // observed bottom of the image
  int expected_bottom = 0;     // d_{eta_i} + ((l - eta_i) mod l)
  std::map<int, int> image_dims;
  std::map<int, int> target_dims;  // e_0 Delta_{lambda+theta}(eta_i), shifted
  std::vector<CheckItem> checks;
  bool pass = true;
};

ShiftImageRecord shift_image(const DeformParam& lambda, const StabParam& theta,
                             int position, const ShiftImageOptions& opt = {});

// Spanning-family generator g~_k(n) of the shift bimodule (k = 1..l).
WeylElement shift_bimodule_generator(const StabParam& theta, int k, int n);

struct IntertwinerRecord {
  WeylElement f_tilde;
  std::vector<CheckItem> checks;
  bool pass = true;
};
IntertwinerRecord intertwiner_element(const DeformParam& lambda, const StabParam& theta,
                            int position, const ShiftImageOptions& opt = {});

// Engine-assembled q-dimension of C tensor_{C[t-cycle]} B tensor
// e_0 T_lambda versus the closed form sum_i q^{d_i + (l-i)} / (1 - q^{-1}).
struct QDimensionRecord {
  TruncatedSeries engine, closed;
  bool equal = false;
};
QDimensionRecord q_dimension(const DeformParam& lambda, const StabParam& theta,
                             int coeff_count,
                             const ShiftImageOptions& opt = {});

// ---------------------------------------------------------------------------
// Monomial basis tau^m z^s of a weight component of M(mu) at a fixed adjoint
// degree, with derivative order neg(m) + s capped. Feeds the image probes and
// the graded comparison with the tautological bundle.
std::vector<InducedElement> b_basis_at_degree(const RatVec& mu, const IntVec& w,
                                              int degree, int order_bound);

}  // namespace cyclo
