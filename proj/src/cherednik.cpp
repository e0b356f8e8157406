#include "cyclo/cherednik.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cyclo {

namespace {

int neg_sum(const IntVec& m) {
  int s = 0;
  for (int x : m) s += std::max(-x, 0);
  return s;
}

int total(const IntVec& m) { return std::accumulate(m.begin(), m.end(), 0); }

RatVec lambda_minus_eps(const DeformParam& lam, int v) {
  RatVec mu = lam.lambda;
  mu[v] -= 1;
  return mu;
}

}  // namespace

InducedElement::InducedElement(int rank, RatVec mu)
    : rank_(rank), mu_(std::move(mu)) {
  check_rank(rank);
  if (static_cast<int>(mu_.size()) != rank_)
    throw std::invalid_argument("mu rank mismatch");
  Rat s(0);
  for (const auto& x : mu_) s += x;
  if (s != 0) throw std::invalid_argument("reduction vector must sum to 0");
}

void InducedElement::add_term(const IntVec& shift, const Poly& p) {
  if (p.is_zero()) return;
  if (static_cast<int>(shift.size()) != rank_)
    throw std::invalid_argument("shift rank mismatch");
  auto [it, fresh] = terms_.emplace(shift, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

InducedElement& InducedElement::operator+=(const InducedElement& o) {
  if (o.rank_ != rank_ || o.mu_ != mu_)
    throw std::invalid_argument("ambient mismatch");
  for (const auto& [m, p] : o.terms_) add_term(m, p);
  return *this;
}

InducedElement& InducedElement::operator-=(const InducedElement& o) {
  if (o.rank_ != rank_ || o.mu_ != mu_)
    throw std::invalid_argument("ambient mismatch");
  for (const auto& [m, p] : o.terms_) {
    Poly q = p;
    q *= Rat(-1);
    add_term(m, q);
  }
  return *this;
}

InducedElement& InducedElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, p] : terms_) p *= c;
  return *this;
}

bool InducedElement::operator==(const InducedElement& o) const {
  return rank_ == o.rank_ && mu_ == o.mu_ && terms_ == o.terms_;
}

std::optional<IntVec> InducedElement::weight() const {
  std::optional<IntVec> w;
  for (const auto& [m, p] : terms_) {
    IntVec wm(rank_);
    for (int j = 0; j < rank_; ++j) wm[j] = m[(j + 1) % rank_] - m[j];
    if (!w)
      w = wm;
    else if (*w != wm)
      return std::nullopt;
  }
  return w;
}

std::optional<int> InducedElement::degree() const {
  std::optional<int> d;
  for (const auto& [m, p] : terms_) {
    int dm = total(m);
    if (!d)
      d = dm;
    else if (*d != dm)
      return std::nullopt;
  }
  return d;
}

InducedElement reduce_to_induced(const WeylElement& x, const RatVec& mu) {
  int l = x.rank();
  InducedElement out(l, mu);
  // Theta_j substitutes to z + mu_0 + ... + mu_{j-1}.
  RatVec sub(l, Rat(0));
  for (int j = 1; j < l; ++j) sub[j] = sub[j - 1] + mu[j - 1];
  for (const auto& [m, coeff] : x.terms()) {
    IntVec shift(l);
    Poly p(coeff);
    for (int i = 0; i < l; ++i) {
      shift[i] = m.a[i] - m.c[i];
      // t^a d^c = tau-part * prod_j (Theta + min(shift, 0) - j).
      int factors = std::min(m.a[i], m.c[i]);
      for (int j = 0; j < factors; ++j) {
        Rat off = sub[i] + Rat(std::min(shift[i], 0) - j);
        p *= Poly::linear(off);  // z + sub[i] + min(shift,0) - j
      }
    }
    out.add_term(shift, p);
  }
  return out;
}

InducedElement reduce_to_induced(const WeylElement& x, const DeformParam& lam) {
  return reduce_to_induced(x, lam.lambda_bar);
}

WeylElement lift_induced(const InducedElement& v) {
  int l = v.rank();
  WeylElement out(l);
  WeylElement theta0 = weyl_multiply(WeylElement::t(l, 0), WeylElement::d(l, 0));
  for (const auto& [m, p] : v.terms()) {
    IntVec a(l, 0), c(l, 0);
    for (int i = 0; i < l; ++i) {
      if (m[i] >= 0)
        a[i] = m[i];
      else
        c[i] = -m[i];
    }
    WeylElement tau = WeylElement::monomial(l, a, c);
    WeylElement zpow = WeylElement::one(l);
    for (int s = 0; s <= p.degree(); ++s) {
      if (p.coeff(s) != 0) {
        WeylElement term = weyl_multiply(tau, zpow);
        term *= p.coeff(s);
        out += term;
      }
      if (s < p.degree()) zpow = weyl_multiply(zpow, theta0);
    }
  }
  return out;
}

InducedElement left_multiply(const WeylElement& x, const InducedElement& v) {
  return reduce_to_induced(weyl_multiply(x, lift_induced(v)), v.mu());
}

InducedElement right_multiply(const InducedElement& v, const WeylElement& d) {
  IntVec w = [&] {
    std::optional<IntVec> ww;
    for (const auto& [m, c] : d.terms()) {
      IntVec wm = gl_weight(m);
      if (!ww)
        ww = wm;
      else if (*ww != wm)
        throw std::invalid_argument("right factor must be weight-homogeneous");
    }
    if (!ww) throw std::invalid_argument("right factor is zero");
    return *ww;
  }();
  RatVec mu = v.mu();
  for (size_t i = 0; i < mu.size(); ++i) mu[i] -= w[i];
  return reduce_to_induced(weyl_multiply(lift_induced(v), d), mu);
}

InducedElement theta_map(const InducedElement& b, const InducedElement& w) {
  if (b.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  auto ww = w.weight();
  if (!ww) throw std::invalid_argument("theta_map: w not weight-homogeneous");
  RatVec want = w.mu();
  for (int i = 0; i < w.rank(); ++i) want[i] += (*ww)[i];
  if (b.mu() != want)
    throw std::invalid_argument(
        "theta_map: ambient violation, need mu(b) = mu(w) + weight(w)");
  return reduce_to_induced(weyl_multiply(lift_induced(b), lift_induced(w)),
                           w.mu());
}

// ---------------------------------------------------------------------------

ColumnQuotient::ColumnQuotient(DeformParam lambda, int vertex)
    : lambda_(std::move(lambda)), vertex_(vertex) {
  if (vertex < 0 || vertex >= lambda_.rank())
    throw std::out_of_range("vertex out of range");
  mu_ = lambda_minus_eps(lambda_, vertex_);
}

const Poly& ColumnQuotient::image_generator(const IntVec& shift) const {
  auto it = gen_cache_.find(shift);
  if (it != gen_cache_.end()) return it->second;
  int l = rank();
  int prev = (vertex_ + l - 1) % l;
  IntVec src = shift;
  src[vertex_] += 1;
  InducedElement y(l, lambda_minus_eps(lambda_, prev));
  y.add_term(src, Poly(Rat(1)));
  InducedElement img = right_multiply(y, WeylElement::d(l, vertex_));
  if (img.mu() != mu_) throw std::logic_error("image ambient mismatch");
  Poly g;
  for (const auto& [m, p] : img.terms()) {
    if (m != shift) throw std::logic_error("image shift mismatch");
    g = p;
  }
  if (g.is_zero() || g.degree() > 1)
    throw std::logic_error("image generator must have degree 0 or 1");
  return gen_cache_.emplace(shift, std::move(g)).first->second;
}

int ColumnQuotient::piece_dim(const IntVec& shift) const {
  return image_generator(shift).degree();
}

std::map<IntVec, Rat> ColumnQuotient::class_components(
    const InducedElement& x) const {
  if (x.mu() != mu_) throw std::invalid_argument("ambient mismatch");
  std::map<IntVec, Rat> out;
  for (const auto& [m, p] : x.terms()) {
    const Poly& g = image_generator(m);
    if (g.degree() == 0) continue;  // piece is zero in the quotient
    Rat root = -g.coeff(0) / g.coeff(1);
    Rat val = p.eval(root);
    if (val != 0) out.emplace(m, std::move(val));
  }
  return out;
}

bool ColumnQuotient::is_zero_in_quotient(const InducedElement& x) const {
  return class_components(x).empty();
}

InducedElement column_cyclic_vector(const DeformParam& lambda, int vertex) {
  int l = lambda.rank();
  WeylElement chain = WeylElement::one(l);
  if (vertex != 0) {
    chain = WeylElement::t(l, 0);
    for (int j = l - 1; j > vertex; --j)
      chain = weyl_multiply(chain, WeylElement::t(l, j));
  }
  return reduce_to_induced(chain, lambda_minus_eps(lambda, vertex));
}

// ---------------------------------------------------------------------------

RatVec standard_action(const DeformParam& lambda, int i, int p_max) {
  int l = lambda.rank();
  if (i < 0 || i >= l) throw std::out_of_range("vertex out of range");
  ColumnQuotient q(lambda, i);
  InducedElement x(l, q.mu());
  x.add_term(IntVec(l, 0), Poly(Rat(1)));
  RatVec kappa;
  InducedElement prev = x;
  for (int p = 1; p <= p_max; ++p) {
    int r = (i + p) % l;
    InducedElement cur = left_multiply(WeylElement::t(l, r), prev);
    InducedElement down = left_multiply(WeylElement::d(l, r), cur);
    auto cls_down = q.class_components(down);
    auto cls_prev = q.class_components(prev);
    if (cls_prev.size() != 1)
      throw std::logic_error("standard module vector must be a single class");
    Rat denom = cls_prev.begin()->second;
    Rat num(0);
    if (!cls_down.empty()) {
      if (cls_down.size() != 1 || cls_down.begin()->first != cls_prev.begin()->first)
        throw std::logic_error("A* image lands outside the expected piece");
      num = cls_down.begin()->second;
    }
    kappa.push_back(num / denom);
    prev = std::move(cur);
  }
  return kappa;
}

HomDim hom_dim(const DeformParam& lambda, int i, int j) {
  int l = lambda.rank();
  if (i < 0 || i >= l || j < 0 || j >= l) throw std::out_of_range("vertex");
  HomDim h;
  if (i == j) {
    h.dim = 1;
    h.p = 0;
    h.n = 0;
    return h;
  }
  Rat s = cyclic_sum(lambda.lambda, i, j);
  if (in_nonpositive_integers(s)) {
    h.dim = 1;
    long n = -mpz_get_si(s.get_num().get_mpz_t());
    h.n = static_cast<int>(n);
    h.p = static_cast<int>(n) * l + (((j - i) % l) + l) % l;
  }
  return h;
}

HomDim hom_dim_bruteforce(const DeformParam& lambda, int i, int j, int depth) {
  int l = lambda.rank();
  HomDim h;
  if (i == j) {
    h.dim = 1;
    h.p = 0;
    h.n = 0;
    return h;
  }
  int res = (((j - i) % l) + l) % l;
  RatVec kappa = standard_action(lambda, i, depth);
  for (int p = 1; p <= depth; ++p) {
    if (p % l != res % l) continue;
    if (kappa[p - 1] == 0) {
      h.dim = 1;
      h.p = p;
      h.n = (p - res) / l;
      return h;
    }
  }
  return h;
}

std::map<int, int> standard_column_dims(const DeformParam& lambda, int i,
                                        int max_degree) {
  int l = lambda.rank();
  ColumnQuotient q(lambda, i);
  IntVec tau = tau_vector(l, i);
  int base = total(shift_for_weight(tau, 0));
  std::map<int, int> dims;
  for (int d = -max_degree; d <= max_degree; ++d) {
    if (((d - base) % l + l) % l != 0) {
      dims[d] = 0;
      continue;
    }
    int k = (d - base) / l;
    dims[d] = q.piece_dim(shift_for_weight(tau, k));
  }
  return dims;
}

std::map<int, InducedElement> standard_column_basis(const DeformParam& lambda,
                                                    int i, int max_degree) {
  int l = lambda.rank();
  ColumnQuotient q(lambda, i);
  IntVec tau = tau_vector(l, i);
  int base = total(shift_for_weight(tau, 0));
  std::map<int, InducedElement> out;
  for (int d = -max_degree; d <= max_degree; ++d) {
    if (((d - base) % l + l) % l != 0) continue;
    IntVec m = shift_for_weight(tau, (d - base) / l);
    if (q.piece_dim(m) == 0) continue;
    InducedElement rep(l, q.mu());
    rep.add_term(m, Poly(Rat(1)));
    out.emplace(d, std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------

WeylElement shift_bimodule_generator(const StabParam& theta, int k, int n) {
  int l = theta.rank();
  EtaSequence eta = theta_order(theta);
  IntVec b = b_vector(theta.theta, eta);
  if (k < 1 || k > l) throw std::out_of_range("k out of range");
  if (n < 0) throw std::out_of_range("n out of range");
  if (k < l && n >= b[k - 1]) throw std::out_of_range("n exceeds b_k - 1");
  IntVec a(l, 0), c(l, 0);
  auto add_t_tail = [&](int from_pos, int times) {
    // t_{eta_{from_pos}} ... t_{eta_l}
    for (int p = from_pos; p <= l; ++p) a[eta.eta[p - 1]] += times;
  };
  auto add_d_head = [&](int to_pos, int times) {
    // d_{eta_1} ... d_{eta_{to_pos}}
    for (int p = 1; p <= to_pos; ++p) c[eta.eta[p - 1]] += times;
  };
  if (k < l) {
    add_t_tail(k + 1, b[k - 1] - n);
    for (int j = k + 1; j <= l - 1; ++j) add_t_tail(j + 1, b[j - 1]);
    add_d_head(k, n);
    for (int j = 1; j <= k - 1; ++j) add_d_head(j, b[j - 1]);
  } else {
    for (int v = 0; v < l; ++v) c[v] += n;  // (d_0 ... d_{l-1})^n
    for (int j = 1; j <= l - 1; ++j) add_d_head(j, b[j - 1]);
  }
  return WeylElement::monomial(l, std::move(a), std::move(c));
}

namespace {

struct ImageProbe {
  const DeformParam& lambda;
  const StabParam& theta;
  const ColumnQuotient& q;
  const InducedElement& u;
  int u_degree;
  int order_bound;

  // Dimension (0 or 1) of the B * u span at adjoint degree d.
  int dim_at(int d) const {
    RatVec mub = lambda.lambda_bar;
    for (const auto& b :
         b_basis_at_degree(mub, theta.theta, d - u_degree, order_bound)) {
      if (!q.is_zero_in_quotient(theta_map(b, u))) return 1;
    }
    return 0;
  }
};

}  // namespace

std::vector<InducedElement> b_basis_at_degree(const RatVec& mu, const IntVec& w,
                                              int degree, int order_bound) {
  int l = static_cast<int>(w.size());
  int base = total(shift_for_weight(w, 0));
  std::vector<InducedElement> out;
  if (((degree - base) % l + l) % l != 0) return out;
  IntVec m = shift_for_weight(w, (degree - base) / l);
  int smax = order_bound - neg_sum(m);
  for (int s = 0; s <= smax; ++s) {
    InducedElement b(l, mu);
    b.add_term(m, Poly::monomial(s, Rat(1)));
    out.push_back(std::move(b));
  }
  return out;
}

ShiftImageRecord shift_image(const DeformParam& lambda, const StabParam& theta,
                             int position, const ShiftImageOptions& opt_in) {
  int l = lambda.rank();
  if (theta.rank() != l) throw std::invalid_argument("rank mismatch");
  if (!classify_lambda(lambda).in_Rreg)
    throw std::invalid_argument("lambda must be regular");
  if (!in_alcove_set(lambda, theta))
    throw std::invalid_argument("theta must lie in Z^l_lambda");
  if (position < 1 || position > l) throw std::out_of_range("position");

  ShiftImageRecord rec;
  rec.position = position;
  EtaSequence eta = theta_order(theta);
  rec.eta = eta.eta;
  rec.b = b_vector(theta.theta, eta);
  int v = eta.eta[position - 1];
  rec.target_vertex = v;

  ColumnQuotient q(lambda, v);
  InducedElement u = column_cyclic_vector(lambda, v);
  int u_deg = (l - v) % l;
  IntVec dvec = d_vector(theta);
  rec.expected_bottom = dvec[v] + u_deg;

  // The degree window and the derivative-order sweep must reach the bottom
  // of the image; scale the caller's bounds with the data.
  ShiftImageOptions opt = opt_in;
  int sum_b = 0;
  for (int x : rec.b) sum_b += x;
  opt.max_degree = std::max(opt.max_degree, rec.expected_bottom + 2 * l);
  opt.order_bound = std::max({opt.order_bound,
                              std::abs(rec.expected_bottom - u_deg) + 2,
                              sum_b + l * opt.n_tail + 2});

  RatVec mub = lambda.lambda_bar;
  auto as_b_element = [&](const WeylElement& g) {
    return reduce_to_induced(g, mub);
  };
  auto w_class = [&](int k, int n) {
    InducedElement w = theta_map(as_b_element(shift_bimodule_generator(theta, k, n)), u);
    return std::pair<InducedElement, bool>(w, !q.is_zero_in_quotient(w));
  };

  auto push = [&](std::string claim, bool pass, std::string witness = "") {
    rec.checks.push_back({std::move(claim), pass, std::move(witness)});
    rec.pass = rec.pass && rec.checks.back().pass;
  };

  // (a) nonvanishing: k < position (all n), and (k, n) = (position, 0).
  for (int k = 1; k <= l; ++k) {
    int nmax = (k < l) ? rec.b[k - 1] - 1 : opt.n_tail;
    for (int n = 0; n <= nmax; ++n) {
      bool expect_nonzero =
          (k < position) || (k == position && n == 0);
      auto [w, nonzero] = w_class(k, n);
      std::ostringstream claim;
      claim << "w_" << k << "(" << n << ") "
            << (expect_nonzero ? "!= 0" : "== 0");
      push(claim.str(), nonzero == expect_nonzero,
           nonzero ? "nonzero class" : "zero class");
    }
  }

  // (d) rescaling coefficients for n >= 1:
  // (t-cycle) w_k(n) = prod_{p=1}^{k} -(lbar_{eta_p..eta_i-1} +
  //                    sum_{q=p}^{k-1} b_q + n - 1) * w_k(n-1).
  WeylElement tcycle = WeylElement::monomial(l, IntVec(l, 1), IntVec(l, 0));
  for (int k = 1; k <= l; ++k) {
    int nmax = (k < l) ? rec.b[k - 1] - 1 : opt.n_tail;
    for (int n = 1; n <= nmax; ++n) {
      auto [wn, nz1] = w_class(k, n);
      auto [wn1, nz2] = w_class(k, n - 1);
      InducedElement lhs = left_multiply(tcycle, wn);
      Rat coef(1);
      for (int p = 1; p <= k; ++p) {
        Rat f = cyclic_sum(lambda.lambda_bar, eta.eta[p - 1], v);
        for (int qq = p; qq <= k - 1; ++qq) f += rec.b[qq - 1];
        f += n - 1;
        coef *= -f;
      }
      InducedElement rhs = wn1;
      rhs *= coef;
      lhs -= rhs;
      std::ostringstream claim;
      claim << "cycle*w_" << k << "(" << n << ") = closed-form * w_" << k << "("
            << (n - 1) << ")";
      push(claim.str(), q.is_zero_in_quotient(lhs));
    }
  }

  // Graded dimensions of the image and generation by w_i(0).
  ImageProbe probe{lambda, theta, q, u, u_deg, opt.order_bound};
  int lo = rec.expected_bottom - 2 * l;
  std::optional<int> bottom;
  for (int d = lo; d <= opt.max_degree; ++d) {
    int dim = probe.dim_at(d);
    rec.image_dims[d] = dim;
    if (dim == 1 && !bottom) bottom = d;
  }
  rec.bottom_degree = bottom.value_or(opt.max_degree + 1);
  push("image bottom degree = d_{eta_i} + deg(u)",
       bottom && *bottom == rec.expected_bottom,
       "bottom " + std::to_string(rec.bottom_degree));

  DeformParam shifted = [&] {
    RatVec nl = lambda.lambda;
    for (int t = 0; t < l; ++t) nl[t] += theta.theta[t];
    return DeformParam(std::move(nl));
  }();
  auto tgt = standard_column_dims(shifted, v, opt.max_degree + 2 * l + std::abs(dvec[v]));
  for (int d = lo; d <= opt.max_degree; ++d) {
    auto it = tgt.find(d - dvec[v]);
    rec.target_dims[d] = (it == tgt.end()) ? 0 : it->second;
  }
  push("graded dims match e_0 Delta_{lambda+theta}(eta_i) shifted by d",
       rec.image_dims == rec.target_dims);

  // Generation: every nonzero piece is hit by (t-cycle)^j w_i(0).
  auto [w0, w0_nonzero] = w_class(position, 0);
  bool gen_ok = w0_nonzero;
  InducedElement cur = w0;
  int w0_deg = cur.degree().value_or(rec.expected_bottom);
  std::map<int, int> span_dims;
  for (int d = lo; d <= opt.max_degree; ++d) span_dims[d] = 0;
  for (int d = w0_deg; d <= opt.max_degree; d += l) {
    if (d >= lo) span_dims[d] = q.is_zero_in_quotient(cur) ? 0 : 1;
    cur = left_multiply(tcycle, cur);
  }
  gen_ok = gen_ok && span_dims == rec.image_dims;
  push("w_i(0) generates the image over C[t-cycle]", gen_ok);

  return rec;
}

IntertwinerRecord intertwiner_element(const DeformParam& lambda, const StabParam& theta,
                            int position, const ShiftImageOptions& opt) {
  int l = lambda.rank();
  IntertwinerRecord rec{WeylElement(l), {}, true};
  EtaSequence eta = theta_order(theta);
  int v = eta.eta[position - 1];
  rec.f_tilde = shift_bimodule_generator(theta, position, 0);

  ColumnQuotient q(lambda, v);
  InducedElement u = column_cyclic_vector(lambda, v);
  InducedElement x = theta_map(reduce_to_induced(rec.f_tilde, lambda.lambda_bar), u);

  auto push = [&](std::string claim, bool pass) {
    rec.checks.push_back({std::move(claim), pass, ""});
    rec.pass = rec.pass && pass;
  };

  push("f~_i applied to the cyclic vector is nonzero",
       !q.is_zero_in_quotient(x));
  WeylElement dcycle = WeylElement::monomial(l, IntVec(l, 0), IntVec(l, 1));
  push("image vector is A*-annihilated",
       q.is_zero_in_quotient(left_multiply(dcycle, x)));

  ShiftImageRecord si = shift_image(lambda, theta, position, opt);
  push("f~_i image generates (graded dims match the shift image)", si.pass);
  return rec;
}

QDimensionRecord q_dimension(const DeformParam& lambda, const StabParam& theta,
                             int coeff_count, const ShiftImageOptions& opt) {
  int l = lambda.rank();
  if (!classify_lambda(lambda).in_tilde_Rreg)
    throw std::invalid_argument("lambda must be tilde-regular");
  if (!in_alcove_set(lambda, theta))
    throw std::invalid_argument("theta must lie in Z^l_lambda");
  IntVec dvec = d_vector(theta);
  std::vector<int> closed_tops, engine_tops;
  EtaSequence eta = theta_order(theta);
  for (int v = 0; v < l; ++v) {
    closed_tops.push_back(dvec[v] + (l - v) % l);
    ShiftImageOptions o = opt;
    o.max_degree = std::max(opt.max_degree, dvec[v] + l + 1);
    ShiftImageRecord rec = shift_image(lambda, theta, eta.position(v), o);
    engine_tops.push_back(rec.bottom_degree);
  }
  int top = *std::max_element(closed_tops.begin(), closed_tops.end());
  top = std::max(top, *std::max_element(engine_tops.begin(), engine_tops.end()));
  TruncatedSeries engine(top - coeff_count + 1, top), closed = engine;
  for (int t : engine_tops) engine.add_geometric(t, 1);
  for (int t : closed_tops) closed.add_geometric(t, 1);
  return {engine, closed, engine == closed};
}

}  // namespace cyclo
