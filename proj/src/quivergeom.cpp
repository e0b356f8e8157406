#include "cyclo/quivergeom.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclo/cherednik.hpp"

namespace cyclo {

namespace {

void require_regular(const StabParam& theta) {
  if (!classify_theta(theta))
    throw std::invalid_argument("theta is not regular");
}

}  // namespace

FixedPointPattern fixed_point(const StabParam& theta, int vertex) {
  require_regular(theta);
  int l = theta.rank();
  if (vertex < 0 || vertex >= l) throw std::out_of_range("vertex");
  FixedPointPattern p;
  p.index = vertex;
  p.a.assign(l, SlotFlag::zero);
  p.b.assign(l, SlotFlag::zero);
  for (int j = 0; j < l; ++j) {
    if (j == vertex) continue;
    if (cyclic_sum(theta.theta, vertex, j) < 0)
      p.b[j] = SlotFlag::nonzero;
    else
      p.a[j] = SlotFlag::nonzero;
  }
  return p;
}

FixedPointPattern fixed_point_eta(const StabParam& theta, int position) {
  EtaSequence eta = theta_order(theta);
  int l = theta.rank();
  if (position < 1 || position > l) throw std::out_of_range("position");
  FixedPointPattern p;
  p.index = eta.eta[position - 1];
  p.a.assign(l, SlotFlag::zero);
  p.b.assign(l, SlotFlag::zero);
  for (int j = 1; j <= l; ++j) {
    int v = eta.eta[j - 1];
    if (j < position) {
      p.b[v] = SlotFlag::nonzero;
    } else if (j > position) {
      p.a[v] = SlotFlag::nonzero;
    }
  }
  return p;
}

CurvePattern curve_pattern(const StabParam& theta, int vertex) {
  FixedPointPattern fp = fixed_point(theta, vertex);
  CurvePattern c;
  c.index = vertex;
  c.a = fp.a;
  c.b = fp.b;
  c.a[vertex] = SlotFlag::free_coord;
  return c;
}

// ---------------------------------------------------------------------------

namespace {

LaurentMonomial chart_gen(const EtaSequence& eta, int l, int j, bool second) {
  LaurentMonomial g = LaurentMonomial::one(l);
  if (!second) {
    for (int p = l - j + 1; p <= l; ++p) g.texp[eta.eta[p - 1]] += 1;
    for (int p = 1; p <= l - j; ++p) g.xexp[eta.eta[p - 1]] -= 1;
  } else {
    for (int p = 1; p <= l - j + 1; ++p) g.xexp[eta.eta[p - 1]] += 1;
    for (int p = l - j + 2; p <= l; ++p) g.texp[eta.eta[p - 1]] -= 1;
  }
  return g;
}

}  // namespace

Chart chart(const StabParam& theta, int j) {
  require_regular(theta);
  int l = theta.rank();
  if (j < 1 || j > l) throw std::out_of_range("chart index");
  EtaSequence eta = theta_order(theta);
  Chart c;
  c.index = j;
  c.gen1 = chart_gen(eta, l, j, false);
  c.gen2 = chart_gen(eta, l, j, true);
  c.image1 = {j, j - l};
  c.image2 = {1 - j, l + 1 - j};
  c.fixed_vertex = eta.eta[l - j];
  return c;
}

namespace {

// Value of a Laurent monomial on the parametrized curve U^0_v: nonzero flags
// evaluate to 1, the free coordinate a_v to the parameter s. Returns nullopt
// on a pole (zero coordinate with negative exponent); otherwise the exponent
// of s (with "identically zero" encoded separately).
struct CurveValue {
  bool zero = false;
  int s_exp = 0;
};

std::optional<CurveValue> eval_on_curve(const LaurentMonomial& m,
                                        const CurvePattern& c) {
  CurveValue v;
  int l = m.rank();
  for (int i = 0; i < l; ++i) {
    auto handle = [&](SlotFlag f, int e, bool is_free) -> bool {
      if (e == 0) return true;
      if (is_free) {
        v.s_exp += e;
        return true;
      }
      if (f == SlotFlag::nonzero) return true;
      if (e > 0) {
        v.zero = true;
        return true;
      }
      return false;  // pole
    };
    if (!handle(c.a[i], m.texp[i], c.a[i] == SlotFlag::free_coord)) return {};
    if (!handle(c.b[i], m.xexp[i], false)) return {};
  }
  return v;
}

}  // namespace

GeomOrder geom_order(const StabParam& theta) {
  require_regular(theta);
  int l = theta.rank();
  GeomOrder out;
  out.gt.assign(l, std::vector<bool>(l, false));
  // succ[v] = fixed vertex reached by U^0_v as its free coordinate grows.
  std::vector<std::optional<int>> succ(l);
  for (int v = 0; v < l; ++v) {
    CurvePattern cp = curve_pattern(theta, v);
    for (int j = 1; j <= l; ++j) {
      Chart ch = chart(theta, j);
      auto v1 = eval_on_curve(ch.gen1, cp);
      auto v2 = eval_on_curve(ch.gen2, cp);
      if (!v1 || !v2) continue;
      auto limit_zero = [](const CurveValue& cv) {
        return cv.zero || cv.s_exp < 0;  // s -> infinity
      };
      auto limit_finite = [](const CurveValue& cv) {
        return cv.zero || cv.s_exp <= 0;
      };
      if (limit_finite(*v1) && limit_finite(*v2) && limit_zero(*v1) &&
          limit_zero(*v2)) {
        if (ch.fixed_vertex != v) {
          if (succ[v] && *succ[v] != ch.fixed_vertex)
            throw std::logic_error("ambiguous curve limit");
          succ[v] = ch.fixed_vertex;
        }
      }
    }
    if (succ[v]) out.incident.emplace_back(v, *succ[v]);
  }
  // Total order: transitive closure of the successor chain.
  for (int v = 0; v < l; ++v) {
    std::optional<int> w = succ[v];
    while (w) {
      out.gt[v][*w] = true;
      w = succ[*w];
    }
  }
  out.eta.resize(l);
  std::iota(out.eta.begin(), out.eta.end(), 0);
  std::sort(out.eta.begin(), out.eta.end(),
            [&](int a, int b) { return out.gt[b][a]; });
  return out;
}

// ---------------------------------------------------------------------------

LaurentMonomial f_monomial(const IntVec& theta_prime, const EtaSequence& eta,
                           int j) {
  int l = static_cast<int>(theta_prime.size());
  if (j < 1 || j > l) throw std::out_of_range("f-monomial index");
  IntVec b = b_vector(theta_prime, eta);
  LaurentMonomial f = LaurentMonomial::one(l);
  for (int k = j; k <= l - 1; ++k)
    for (int p = k + 1; p <= l; ++p) f.texp[eta.eta[p - 1]] += b[k - 1];
  for (int k = 1; k <= j - 1; ++k)
    for (int p = 1; p <= k; ++p) f.xexp[eta.eta[p - 1]] += b[k - 1];
  return f;
}

std::vector<CommMonomial> g_basis(const IntVec& theta_prime,
                                  const EtaSequence& eta, int tail_bound) {
  int l = static_cast<int>(theta_prime.size());
  IntVec b = b_vector(theta_prime, eta);
  std::vector<CommMonomial> out;
  for (int k = 1; k <= l; ++k) {
    int nmax = (k < l) ? b[k - 1] - 1 : tail_bound;
    for (int n = 0; n <= nmax; ++n) {
      LaurentMonomial g = LaurentMonomial::one(l);
      if (k < l)
        for (int p = k + 1; p <= l; ++p) g.texp[eta.eta[p - 1]] += b[k - 1] - n;
      for (int j = k + 1; j <= l - 1; ++j)
        for (int p = j + 1; p <= l; ++p) g.texp[eta.eta[p - 1]] += b[j - 1];
      for (int p = 1; p <= k; ++p) g.xexp[eta.eta[p - 1]] += n;
      for (int j = 1; j <= k - 1; ++j)
        for (int p = 1; p <= j; ++p) g.xexp[eta.eta[p - 1]] += b[j - 1];
      out.push_back(laurent_to_comm(g));
    }
  }
  return out;
}

std::vector<PolytopePoint> polytope_sections(const IntVec& b, Bidegree cap) {
  int l = static_cast<int>(b.size()) + 1;
  for (int x : b)
    if (x < 0) throw std::invalid_argument("b must be nonnegative");
  // a_i = sum_{s=1}^{i-1} s b_{l-i+s}; constraints m_1 + i m_2 >= -a_i.
  IntVec a(l + 1, 0);
  for (int i = 0; i <= l; ++i)
    for (int s = 1; s <= i - 1; ++s) a[i] += s * b[l - i + s - 1];
  int twist = 0;
  for (int k = 1; k <= l - 1; ++k) twist += k * b[k - 1];
  std::vector<PolytopePoint> out;
  for (int m1 = 0; m1 <= cap.t; ++m1) {
    // y-degree of the twisted monomial is m1 + l m2 + twist.
    int m2_start = -((a[l] + m1) / l + 2);
    for (int m2 = m2_start; m1 + l * m2 + twist <= cap.xi; ++m2) {
      bool ok = true;
      for (int i = 0; i <= l && ok; ++i) ok = m1 + i * m2 >= -a[i];
      if (!ok || m1 + l * m2 + twist < 0) continue;
      out.push_back({m1, m2, m1, m1 + l * m2});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

PicardLattice::PicardLattice(int l) : l_(l) { check_rank(l); }

IntVec PicardLattice::divisor_D(int i) const {
  if (i < 1 || i > l_ - 1) throw std::out_of_range("basis index");
  IntVec v(l_ + 1, 0);
  for (int j = 0; j <= i - 1; ++j) v[l_ - j] += i - j;
  return v;
}

IntVec PicardLattice::decompose(const IntVec& coeffs) const {
  if (static_cast<int>(coeffs.size()) != l_ + 1)
    throw std::invalid_argument("coefficient vector must have length l+1");
  // Solve coeffs + alpha*(1,...,1) + beta*(0,1,...,l) = sum c_i D(i) over Q,
  // then check integrality. Unknowns: alpha, beta, c_1..c_{l-1}.
  int n = l_ + 1;
  std::vector<RatVec> mat(n, RatVec(n + 1, Rat(0)));
  for (int r = 0; r < n; ++r) {
    mat[r][0] = 1;        // alpha
    mat[r][1] = Rat(r);   // beta
    mat[r][n] = Rat(-coeffs[r]);
  }
  for (int i = 1; i <= l_ - 1; ++i) {
    IntVec d = divisor_D(i);
    for (int r = 0; r < n; ++r) mat[r][1 + i] = Rat(-d[r]);
  }
  // Gaussian elimination.
  int row = 0;
  std::vector<int> pivot(n, -1);
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (mat[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(mat[pr], mat[row]);
    Rat inv = mat[row][col];
    for (int c = col; c <= n; ++c) mat[row][c] /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || mat[r][col] == 0) continue;
      Rat f = mat[r][col];
      for (int c = col; c <= n; ++c) mat[r][c] -= f * mat[row][c];
    }
    pivot[col] = row;
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (mat[r][n] != 0) throw std::logic_error("inconsistent Picard relation");
  IntVec out(l_ - 1, 0);
  for (int i = 1; i <= l_ - 1; ++i) {
    if (pivot[1 + i] < 0) throw std::logic_error("underdetermined decomposition");
    Rat v = mat[pivot[1 + i]][n];
    if (!is_integer(v)) throw std::logic_error("non-integral decomposition");
    out[i - 1] = static_cast<int>(mpz_get_si(v.get_num().get_mpz_t()));
  }
  return out;
}

// ---------------------------------------------------------------------------

int o1_fiber_degree(const StabParam& theta, int position) {
  EtaSequence eta = theta_order(theta);
  IntVec d = d_vector(theta);
  int v = eta.eta[position - 1];
  int deg = d[v];
  // Cross-check against the signed degree of f^theta_position.
  LaurentMonomial f = f_monomial(theta.theta, eta, position);
  if (f.specialized_degree() != deg)
    throw std::logic_error("O(1) fiber degree mismatch with f-monomial");
  return deg;
}

std::map<std::pair<int, int>, long long> taut_fiber_bidegrees(
    const StabParam& theta, int vertex) {
  require_regular(theta);
  int l = theta.rank();
  FixedPointPattern p = fixed_point(theta, vertex);
  // Germ basis: v_k = E_{0k} (x) nu_1..nu_k for k <= vertex-1, else
  // E_{0k} (x) nu'_{k+1}..nu'_{l-1} nu'_0, with nu_j = t_j^{-1} or xi_j and
  // nu'_j = t_j or xi_j^{-1} according to the nonvanishing coordinate.
  std::map<std::pair<int, int>, long long> out;
  for (int k = 0; k < l; ++k) {
    LaurentMonomial germ = LaurentMonomial::one(l);
    if (k <= vertex - 1) {
      for (int j = 1; j <= k; ++j) {
        if (p.a[j] == SlotFlag::nonzero)
          germ.texp[j] -= 1;
        else
          germ.xexp[j] += 1;
      }
    } else {
      for (int jj = k + 1; jj <= l; ++jj) {
        int j = jj % l;
        if (p.b[j] == SlotFlag::nonzero)
          germ.xexp[j] -= 1;
        else
          germ.texp[j] += 1;
      }
    }
    out[germ.qt_degree()] += 1;
  }
  return out;
}

TruncatedSeries taut_fiber_qt(const StabParam& theta, int vertex) {
  int l = theta.rank();
  TruncatedSeries s(-(l - 1), l);
  for (const auto& [bd, n] : taut_fiber_bidegrees(theta, vertex))
    s.add(bd.first - bd.second, n);
  return s;
}

std::pair<std::pair<int, int>, std::pair<int, int>> cotangent_weights(
    int l, int position) {
  check_rank(l);
  if (position < 1 || position > l) throw std::out_of_range("position");
  return {{l - position, -position}, {-l + position + 1, position + 1}};
}

// ---------------------------------------------------------------------------

AblRecord abl_character(const StabParam& theta, int m, int coeff_count) {
  require_regular(theta);
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  int l = theta.rank();
  EtaSequence eta = theta_order(theta);
  StabParam scaled(scaled_plus_tau(theta.theta, m, 0));
  IntVec dm = d_vector(scaled);

  std::vector<int> tops;
  for (int i = 1; i <= l; ++i) tops.push_back(dm[i % l] + (l - i));
  int top = *std::max_element(tops.begin(), tops.end());
  int lo = top - coeff_count + 1;

  AblRecord rec{TruncatedSeries(lo, top), TruncatedSeries(lo, top),
                std::nullopt, false};
  for (int t : tops) rec.closed.add_geometric(t, 1);

  // Enumerated side: survivors of the cycle quotient per column weight.
  for (int k = 0; k < l; ++k) {
    IntVec w = scaled_plus_tau(theta.theta, m, k);
    IntVec m0 = shift_for_weight(w, 0);
    int sigma0 = std::accumulate(m0.begin(), m0.end(), 0);
    int kk_lo = (lo - sigma0) / l - 2, kk_hi = (top - sigma0) / l + 2;
    int capt = 0, capx = 0;
    for (int kk = kk_lo; kk <= kk_hi; ++kk) {
      IntVec mm = shift_for_weight(w, kk);
      int pos = 0, neg = 0;
      for (int e : mm) (e >= 0 ? pos : neg) += std::abs(e);
      capt = std::max(capt, pos);
      capx = std::max(capx, neg);
    }
    Bidegree cap{capt + l + 1, capx + l + 1};
    auto basis = semi_invariant_basis(w, cap);
    for (const auto& mon : quotient_basis_mod_cycle(basis)) {
      auto [r, c] = mon.bidegree();
      rec.enumerated.add(r - c, 1);
    }
  }

  if (m >= 1) {
    // Two-variable localization: fibers from the free chart generators,
    // cotangent
    // denominators specialize to (1-q^l)(1-q^{-l}); the t-cycle factor 1-q^l
    // cancels, leaving sum q^{deg f} / (1 - q^{-l}).
    TruncatedSeries loc(lo, top);
    for (int i = 1; i <= l; ++i) {
      for (int k = 0; k < l; ++k) {
        LaurentMonomial f =
            f_monomial(scaled_plus_tau(theta.theta, m, k), eta, i);
        loc.add_geometric(f.specialized_degree(), l);
      }
    }
    rec.localization = loc;
  }

  rec.equal = rec.closed == rec.enumerated &&
              (!rec.localization || *rec.localization == rec.closed);
  return rec;
}

// ---------------------------------------------------------------------------

namespace {

// Coordinates of the normal form: (shift, z-degree), prioritized by
// derivative order so that row echelon pivots of highest order come first.
// A pivot of order exactly c then witnesses one dimension of gr at filtration
// level c (combinations of products may drop order, so the elimination has to
// run over the whole degree slice at once).
struct GrCoord {
  int neg_order;  // -(neg(shift) + zdeg)
  IntVec shift;
  int zdeg;
  auto operator<=>(const GrCoord&) const = default;
};

using GrRow = std::map<GrCoord, Rat>;

GrRow to_row(const InducedElement& x) {
  GrRow row;
  for (const auto& [sh, p] : x.terms()) {
    int neg = 0;
    for (int v : sh) neg += std::max(-v, 0);
    for (int d = 0; d <= p.degree(); ++d)
      if (p.coeff(d) != 0) row[{-(neg + d), sh, d}] = p.coeff(d);
  }
  return row;
}

// Incremental reduction; pivots keyed by leading coordinate.
struct Echelon {
  std::map<GrCoord, GrRow> pivots;

  void insert(GrRow row) {
    while (!row.empty()) {
      GrCoord lead = row.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Rat inv = row.begin()->second;
        for (auto& [k, v] : row) v /= inv;
        pivots.emplace(lead, std::move(row));
        return;
      }
      Rat f = row.begin()->second;
      for (const auto& [k, v] : it->second) {
        auto [jt, fresh] = row.emplace(k, Rat(0));
        jt->second -= f * v;
        if (jt->second == 0) row.erase(jt);
      }
    }
  }

  std::map<int, int> pivot_count_by_order() const {
    std::map<int, int> out;
    for (const auto& [lead, row] : pivots) out[-lead.neg_order] += 1;
    return out;
  }
};

int element_order(const InducedElement& x) {
  int o = -1;
  for (const auto& [sh, p] : x.terms()) {
    int neg = 0;
    for (int v : sh) neg += std::max(-v, 0);
    o = std::max(o, neg + p.degree());
  }
  return o;
}

}  // namespace

GrCheckRecord gr_main_check(const DeformParam& lambda, const StabParam& theta,
                            int m, Bidegree cap) {
  int l = lambda.rank();
  if (!classify_lambda(lambda).in_tilde_Rreg)
    throw std::invalid_argument("lambda must be tilde-regular");
  if (!in_alcove_set(lambda, theta))
    throw std::invalid_argument("theta must lie in Z^l_lambda");
  GrCheckRecord rec;
  IntVec mtheta(l);
  for (int i = 0; i < l; ++i) mtheta[i] = m * theta.theta[i];
  // Products up to this summed order feed the elimination; order can drop
  // under cancellation, never rise.
  const int gen_order = cap.xi + 4;

  for (int col = 0; col < l; ++col) {
    IntVec wcol = scaled_plus_tau(theta.theta, m, col);
    RatVec mu_col = lambda.lambda;
    mu_col[col] -= 1;
    IntVec tau = tau_vector(l, col);
    std::map<std::pair<int, int>, int> expected_dim;
    for (const auto& mon : semi_invariant_basis(wcol, cap))
      expected_dim[mon.bidegree()] += 1;

    for (int e = -cap.xi; e <= cap.t; ++e) {
      Echelon ech;
      int span = l * (gen_order + 3) + 3 * l;
      for (int eb = e - span; eb <= e + span; ++eb) {
        for (const auto& b :
             b_basis_at_degree(lambda.lambda_bar, mtheta, eb, gen_order)) {
          int ob = element_order(b);
          for (const auto& wv :
               b_basis_at_degree(mu_col, tau, e - eb, gen_order - ob)) {
            GrRow row = to_row(theta_map(b, wv));
            if (!row.empty()) ech.insert(std::move(row));
          }
        }
      }
      auto by_order = ech.pivot_count_by_order();
      for (int c = 0; c <= cap.xi; ++c) {
        int r = e + c;
        if (r < 0 || r > cap.t) continue;
        int got = by_order.count(c) ? by_order[c] : 0;
        int want =
            expected_dim.count({r, c}) ? expected_dim[{r, c}] : 0;
        rec.pieces_checked += 1;
        if (got != want) {
          rec.equal = false;
          rec.failures.push_back({col, r, c, got, want});
        }
      }
    }
  }
  return rec;
}

// ---------------------------------------------------------------------------

IntVec char_cycle(const StabParam& theta, int vertex) {
  require_regular(theta);
  int l = theta.rank();
  IntVec out;
  for (int j = 0; j < l; ++j) {
    CurvePattern cp = curve_pattern(theta, j);
    // Columns retained in the fiber of P~/P~ A*bar at a generic point: the
    // right action of sum b_k E_{k-1,k} hits exactly the columns with
    // b_k != 0 there.
    bool retained = cp.b[vertex] != SlotFlag::nonzero;
    if (retained) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntVec char_cycle_comb(const StabParam& theta, int vertex) {
  require_regular(theta);
  int l = theta.rank();
  IntVec out;
  for (int j = 0; j < l; ++j)
    if (j == vertex || cyclic_sum(theta.theta, vertex, j) < 0) out.push_back(j);
  std::sort(out.begin(), out.end());
  return out;
}

IntVec ch_standard_eta(const StabParam& theta, int position) {
  EtaSequence eta = theta_order(theta);
  if (position < 1 || position > theta.rank())
    throw std::out_of_range("position");
  IntVec out(eta.eta.begin(), eta.eta.begin() + position);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<IntVec> rch_simple(const DeformParam& lambda,
                                 const StabParam& theta, int position) {
  if (!classify_lambda(lambda).in_Rreg)
    throw std::invalid_argument("lambda must be regular");
  EtaSequence eta = theta_order(theta);
  auto rep = rep_order(lambda);
  int vi = eta.eta[position - 1];
  // Largest j < position with eta_i >_rep eta_j (the gap condition).
  for (int j = position - 1; j >= 1; --j) {
    if (rep[vi][eta.eta[j - 1]]) {
      IntVec out(eta.eta.begin() + j, eta.eta.begin() + position);
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace cyclo
