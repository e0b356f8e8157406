#include "cyclo/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cyclo {

void WeylElement::add_term(const WeylMonom& m, const Rat& coeff) {
  if (coeff == 0) return;
  if (static_cast<int>(m.a.size()) != rank_ ||
      static_cast<int>(m.c.size()) != rank_)
    throw std::invalid_argument("monomial rank mismatch");
  auto [it, fresh] = terms_.emplace(m, coeff);
  if (!fresh && (it->second += coeff) == 0) terms_.erase(it);
}

WeylElement WeylElement::one(int rank) {
  return monomial(rank, IntVec(rank, 0), IntVec(rank, 0));
}

WeylElement WeylElement::t(int rank, int i, int power) {
  IntVec a(rank, 0), c(rank, 0);
  a.at(i) = power;
  return monomial(rank, std::move(a), std::move(c));
}

WeylElement WeylElement::d(int rank, int i, int power) {
  IntVec a(rank, 0), c(rank, 0);
  c.at(i) = power;
  return monomial(rank, std::move(a), std::move(c));
}

WeylElement WeylElement::monomial(int rank, IntVec a, IntVec c, Rat coeff) {
  WeylElement x(rank);
  x.add_term({std::move(a), std::move(c)}, coeff);
  return x;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

int WeylElement::order() const {
  int best = -1;
  for (const auto& [m, c] : terms_)
    best = std::max(best, std::accumulate(m.c.begin(), m.c.end(), 0));
  return best;
}

WeylElement weyl_multiply(const WeylElement& x, const WeylElement& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
  int l = x.rank();
  WeylElement out(l);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      // Reorder d^{cx} t^{ay} slot by slot; slots are independent.
      std::vector<std::pair<WeylMonom, Rat>> acc = {
          {WeylMonom{IntVec(l, 0), IntVec(l, 0)}, cx * cy}};
      for (int i = 0; i < l; ++i) {
        int ci = mx.c[i], ai = my.a[i];
        std::vector<std::pair<WeylMonom, Rat>> next;
        for (int k = 0; k <= std::min(ci, ai); ++k) {
          Rat f = Rat(static_cast<long>(binomial(ci, k))) *
                      Rat(static_cast<long>(binomial(ai, k)));
          for (int j = 2; j <= k; ++j) f *= j;  // k!
          for (const auto& [m, c] : acc) {
            WeylMonom n = m;
            n.a[i] = ai - k;
            n.c[i] = ci - k;
            next.emplace_back(std::move(n), c * f);
          }
        }
        acc = std::move(next);
      }
      for (auto& [m, c] : acc) {
        for (int i = 0; i < l; ++i) {
          m.a[i] += mx.a[i];
          m.c[i] += my.c[i];
        }
        out.add_term(m, c);
      }
    }
  }
  return out;
}

WeylElement weyl_power(const WeylElement& x, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  WeylElement acc = WeylElement::one(x.rank());
  for (int i = 0; i < n; ++i) acc = weyl_multiply(acc, x);
  return acc;
}

// ---------------------------------------------------------------------------

std::pair<int, int> CommMonomial::bidegree() const {
  int sa = std::accumulate(a.begin(), a.end(), 0);
  int sc = std::accumulate(c.begin(), c.end(), 0);
  return {s + sa, s + sc};
}

CommMonomial comm_canonicalize(int s, IntVec a, IntVec c) {
  if (s < 0) throw std::invalid_argument("negative u-exponent");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || c[i] < 0) throw std::invalid_argument("negative exponent");
    int p = std::min(a[i], c[i]);
    s += p;
    a[i] -= p;
    c[i] -= p;
  }
  return CommMonomial{s, std::move(a), std::move(c)};
}

CommMonomial comm_multiply(const CommMonomial& x, const CommMonomial& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
  IntVec a = x.a, c = x.c;
  for (int i = 0; i < x.rank(); ++i) {
    a[i] += y.a[i];
    c[i] += y.c[i];
  }
  return comm_canonicalize(x.s + y.s, std::move(a), std::move(c));
}

void comm_add_term(CommPoly& p, const CommMonomial& m, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = p.emplace(m, coeff);
  if (!fresh && (it->second += coeff) == 0) p.erase(it);
}

CommPoly comm_multiply(const CommPoly& x, const CommPoly& y) {
  CommPoly out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) comm_add_term(out, comm_multiply(mx, my), cx * cy);
  return out;
}

Rat comm_eval(const CommMonomial& m, const RatVec& a, const Rat& p) {
  Rat v(1);
  for (int i = 0; i < m.s; ++i) v *= p;
  for (int i = 0; i < m.rank(); ++i) {
    if (a[i] == 0) throw std::invalid_argument("patch needs nonzero a_i");
    Rat bi = p / a[i];
    for (int k = 0; k < m.a[i]; ++k) v *= a[i];
    for (int k = 0; k < m.c[i]; ++k) v *= bi;
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

IntVec weight_from_exponents(const IntVec& a, const IntVec& c) {
  int l = static_cast<int>(a.size());
  IntVec w(l);
  for (int j = 0; j < l; ++j) {
    int jn = (j + 1) % l;
    w[j] = (a[jn] - c[jn]) - (a[j] - c[j]);
  }
  return w;
}

}  // namespace

IntVec gl_weight(const WeylMonom& m) { return weight_from_exponents(m.a, m.c); }

IntVec gl_weight(const CommMonomial& m) { return weight_from_exponents(m.a, m.c); }

IntVec gl_weight(const LaurentMonomial& m) {
  return weight_from_exponents(m.texp, m.xexp);
}

IntVec gl_weight(const WeylElement& x) {
  if (x.terms().size() != 1)
    throw std::invalid_argument("gl_weight needs a monomial");
  return gl_weight(x.terms().begin()->first);
}

CommPoly weyl_symbol(const WeylElement& x) {
  if (x.is_zero()) throw std::invalid_argument("symbol of zero");
  int top = x.order();
  CommPoly out;
  for (const auto& [m, c] : x.terms()) {
    if (std::accumulate(m.c.begin(), m.c.end(), 0) != top) continue;
    comm_add_term(out, comm_canonicalize(0, m.a, m.c), c);
  }
  return out;
}

// ---------------------------------------------------------------------------

IntVec shift_for_weight(const IntVec& w, int k) {
  int l = static_cast<int>(w.size());
  IntVec m(l);
  int acc = 0;
  for (int i = 0; i < l; ++i) {
    m[i] = k + acc;
    acc += w[i];
  }
  if (acc != 0) throw std::invalid_argument("weight must sum to 0");
  return m;
}

CommMonomial monomial_from_shift(const IntVec& m, int s) {
  int l = static_cast<int>(m.size());
  IntVec a(l, 0), c(l, 0);
  for (int i = 0; i < l; ++i) {
    if (m[i] >= 0)
      a[i] = m[i];
    else
      c[i] = -m[i];
  }
  return CommMonomial{s, std::move(a), std::move(c)};
}

std::vector<CommMonomial> semi_invariant_basis(const IntVec& w, Bidegree cap) {
  long long tot = std::accumulate(w.begin(), w.end(), 0LL);
  if (tot != 0) throw std::invalid_argument("weight must sum to 0");
  std::vector<CommMonomial> out;
  // Entries of m(k) are k + partial sums; both positive and negative parts of
  // the bidegree grow linearly in |k|, so the cap bounds k.
  int spread = 0, acc = 0;
  for (int x : w) {
    acc += x;
    spread = std::max(spread, std::abs(acc));
  }
  int kmax = std::max(cap.t, cap.xi) + spread + 1;
  for (int k = -kmax; k <= kmax; ++k) {
    CommMonomial base = monomial_from_shift(shift_for_weight(w, k));
    auto [r, c] = base.bidegree();
    for (int s = 0; r + s <= cap.t && c + s <= cap.xi; ++s) {
      CommMonomial m = base;
      m.s = s;
      out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CommMonomial> semi_invariant_basis_bruteforce(const IntVec& w,
                                                          Bidegree cap) {
  int l = static_cast<int>(w.size());
  std::set<CommMonomial> out;
  // All raw exponent vectors with sum a <= cap.t, sum c <= cap.xi.
  std::vector<IntVec> as, cs;
  IntVec cur(l, 0);
  auto enumerate = [&](auto&& self, std::vector<IntVec>& dst, int pos,
                       int left) -> void {
    if (pos == l) {
      dst.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, dst, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  enumerate(enumerate, as, 0, cap.t);
  enumerate(enumerate, cs, 0, cap.xi);
  for (const auto& a : as)
    for (const auto& c : cs) {
      if (weight_from_exponents(a, c) != w) continue;
      CommMonomial m = comm_canonicalize(0, a, c);
      auto [r, s] = m.bidegree();
      if (r <= cap.t && s <= cap.xi) out.insert(std::move(m));
    }
  return {out.begin(), out.end()};
}

std::vector<CommMonomial> quotient_basis_mod_cycle(
    const std::vector<CommMonomial>& basis) {
  if (basis.empty()) return {};
  int l = basis.front().rank();
  CommMonomial cycle{0, IntVec(l, 1), IntVec(l, 0)};
  std::set<CommMonomial> image;
  for (const auto& m : basis) image.insert(comm_multiply(cycle, m));
  std::vector<CommMonomial> out;
  for (const auto& m : basis)
    if (!image.count(m)) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
  LaurentMonomial r = *this;
  for (int i = 0; i < rank(); ++i) {
    r.texp[i] += o.texp[i];
    r.xexp[i] += o.xexp[i];
  }
  return r;
}

LaurentMonomial LaurentMonomial::inverse() const {
  LaurentMonomial r = *this;
  for (auto& e : r.texp) e = -e;
  for (auto& e : r.xexp) e = -e;
  return r;
}

std::pair<int, int> LaurentMonomial::qt_degree() const {
  return {std::accumulate(texp.begin(), texp.end(), 0),
          std::accumulate(xexp.begin(), xexp.end(), 0)};
}

int LaurentMonomial::specialized_degree() const {
  auto [q, t] = qt_degree();
  return q - t;
}

CommMonomial laurent_to_comm(const LaurentMonomial& m) {
  for (int e : m.texp)
    if (e < 0) throw std::invalid_argument("negative t exponent");
  for (int e : m.xexp)
    if (e < 0) throw std::invalid_argument("negative xi exponent");
  return comm_canonicalize(0, m.texp, m.xexp);
}

}  // namespace cyclo
