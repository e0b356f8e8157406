#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyclo/params.hpp"
#include "cyclo/series.hpp"
#include "cyclo/weyl.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// Fixed points and exceptional curves, as zero/nonzero flag patterns.

enum class SlotFlag { zero, nonzero, free_coord };

struct FixedPointPattern {
  int index = 0;  // vertex
  std::vector<SlotFlag> a, b;
};

struct CurvePattern {
  int index = 0;  // vertex
  std::vector<SlotFlag> a, b;
};

FixedPointPattern fixed_point(const StabParam& theta, int vertex);
// Same point indexed by position in the eta chain (1-based); must agree with
// the vertex form under relabeling.
FixedPointPattern fixed_point_eta(const StabParam& theta, int position);
CurvePattern curve_pattern(const StabParam& theta, int vertex);

// ---------------------------------------------------------------------------
// Toric charts.

struct Chart {
  int index = 0;  // j = 1..l
  LaurentMonomial gen1, gen2;
  // images under t -> x, xi -> y, as (x, y) exponent pairs
  std::pair<int, int> image1, image2;
  int fixed_vertex = 0;  // the chart's T-fixed point p_{eta_{l-j+1}}
};

Chart chart(const StabParam& theta, int j);

// Geometric order: adjacency from curve limits in the charts, total order as
// its transitive closure.
struct GeomOrder {
  std::vector<std::vector<bool>> gt;          // total order
  std::vector<std::pair<int, int>> incident;  // (v, w): closure(U_v) meets U^0_w
  IntVec eta;
};
GeomOrder geom_order(const StabParam& theta);

// ---------------------------------------------------------------------------
// Section bases.

// f^{theta'}_j of the fixed-point fiber (j = 1..l).
LaurentMonomial f_monomial(const IntVec& theta_prime, const EtaSequence& eta,
                           int j);

// g^{theta'}_k(n) family; k = l uses n = 0..tail_bound.
std::vector<CommMonomial> g_basis(const IntVec& theta_prime,
                                  const EtaSequence& eta, int tail_bound);

struct PolytopePoint {
  int m1 = 0, m2 = 0;
  int xdeg = 0, ydeg = 0;  // monomial x^{m1} y^{m1 + l m2}
};
// Lattice points of P_{D(b)} with 0 <= xdeg <= cap.t and the twisted y-degree
// (ydeg + sum_k k b_k) within [0, cap.xi].
std::vector<PolytopePoint> polytope_sections(const IntVec& b, Bidegree cap);

// ---------------------------------------------------------------------------
// Picard lattice: coefficients on D_0..D_l modulo the two toric relations;
// basis D(1)..D(l-1).

class PicardLattice {
 public:
  explicit PicardLattice(int l);
  int rank() const { return l_; }
  // Coefficient vector (length l+1) of D(i) on D_0..D_l.
  IntVec divisor_D(int i) const;
  // Unique coordinates of a class in the basis D(1)..D(l-1).
  IntVec decompose(const IntVec& coeffs) const;

 private:
  int l_;
};

// ---------------------------------------------------------------------------
// Equivariant data at fixed points.

int o1_fiber_degree(const StabParam& theta, int position);
// Two-variable character of the tautological fiber from the germ basis;
// keys are (q, t) bidegrees.
std::map<std::pair<int, int>, long long> taut_fiber_bidegrees(
    const StabParam& theta, int vertex);
// Specialization at t = q^{-1}.
TruncatedSeries taut_fiber_qt(const StabParam& theta, int vertex);
std::pair<std::pair<int, int>, std::pair<int, int>> cotangent_weights(
    int l, int position);

// ---------------------------------------------------------------------------
// Character identity (localization vs enumeration).

struct AblRecord {
  TruncatedSeries closed, enumerated;
  std::optional<TruncatedSeries> localization;  // two-variable route, m >= 1
  bool equal = false;
};
AblRecord abl_character(const StabParam& theta, int m, int coeff_count);

// ---------------------------------------------------------------------------
// gr-image comparison (per column weight m*theta + tau_k, per bidegree).

struct GrCheckFailure {
  int column = 0;
  int t_degree = 0, xi_degree = 0;
  int got = 0, expected = 0;
};
struct GrCheckRecord {
  bool equal = true;
  std::vector<GrCheckFailure> failures;
  long long pieces_checked = 0;
};
GrCheckRecord gr_main_check(const DeformParam& lambda, const StabParam& theta,
                            int m, Bidegree cap);

// ---------------------------------------------------------------------------
// Characteristic cycles (multisets of curve indices, sorted).

IntVec char_cycle(const StabParam& theta, int vertex);       // geometric route
IntVec char_cycle_comb(const StabParam& theta, int vertex);  // {j : i >= j}
IntVec ch_standard_eta(const StabParam& theta, int position);
std::optional<IntVec> rch_simple(const DeformParam& lambda,
                                 const StabParam& theta, int position);

}  // namespace cyclo
