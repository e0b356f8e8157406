#include "cyclo/params.hpp"

#include <algorithm>
#include <numeric>

namespace cyclo {

void check_rank(int l) {
  if (l < 2) throw std::invalid_argument("rank l must be >= 2");
}

DeformParam::DeformParam(RatVec lam) : lambda(std::move(lam)) {
  check_rank(rank());
  Rat s(0);
  for (const auto& x : lambda) s += x;
  if (s != 1) throw std::invalid_argument("lambda must sum to 1");
  lambda_bar = lambda;
  lambda_bar[0] -= 1;
}

DeformParam DeformParam::from_kappa(const RatVec& kappa) {
  int l = static_cast<int>(kappa.size());
  check_rank(l);
  RatVec lam(l);
  for (int i = 0; i < l; ++i)
    lam[i] = kappa[(i + 1) % l] - kappa[i] + Rat(1, l);
  return DeformParam(std::move(lam));
}

StabParam::StabParam(IntVec th) : theta(std::move(th)) {
  check_rank(rank());
  long long s = std::accumulate(theta.begin(), theta.end(), 0LL);
  if (s != 0) throw std::invalid_argument("theta must sum to 0");
}

namespace {

template <typename T, typename S>
S cyclic_sum_impl(const std::vector<T>& v, int i, int j) {
  int l = static_cast<int>(v.size());
  if (i < 0 || i >= l || j < 0 || j >= l)
    throw std::out_of_range("cyclic_sum index");
  S s{};
  for (int k = i; k != j; k = (k + 1) % l) s += v[k];
  return s;
}

}  // namespace

Rat cyclic_sum(const RatVec& v, int i, int j) {
  return cyclic_sum_impl<Rat, Rat>(v, i, j);
}

long long cyclic_sum(const IntVec& v, int i, int j) {
  return cyclic_sum_impl<int, long long>(v, i, j);
}

LambdaClass classify_lambda(const DeformParam& lam) {
  int l = lam.rank();
  LambdaClass c;
  c.in_Rreg = true;
  c.in_tilde_Rreg = true;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (cyclic_sum(lam.lambda_bar, i, j) == 0) c.in_Rreg = false;
      if (cyclic_sum(lam.lambda, i, j) == 0) c.in_tilde_Rreg = false;
    }
  c.in_tilde_Rreg = c.in_tilde_Rreg && c.in_Rreg;
  return c;
}

bool classify_theta(const StabParam& theta) {
  int l = theta.rank();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j && cyclic_sum(theta.theta, i, j) == 0) return false;
  return true;
}

bool in_alcove_set(const DeformParam& lam, const StabParam& theta) {
  if (lam.rank() != theta.rank()) throw std::invalid_argument("rank mismatch");
  if (!classify_theta(theta))
    throw std::invalid_argument("theta is not regular");
  int l = lam.rank();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (in_nonpositive_integers(cyclic_sum(lam.lambda, i, j)) &&
          cyclic_sum(theta.theta, i, j) >= 0)
        return false;
    }
  return true;
}

std::vector<std::vector<bool>> rep_order(const DeformParam& lam) {
  int l = lam.rank();
  std::vector<std::vector<bool>> rel(l, std::vector<bool>(l, false));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j) rel[i][j] = in_nonpositive_integers(cyclic_sum(lam.lambda, i, j));
  return rel;
}

int EtaSequence::position(int vertex) const {
  for (int k = 0; k < static_cast<int>(eta.size()); ++k)
    if (eta[k] == vertex) return k + 1;
  throw std::out_of_range("vertex not in eta");
}

EtaSequence theta_order(const StabParam& theta) {
  if (!classify_theta(theta))
    throw std::invalid_argument("theta is not regular");
  int l = theta.rank();
  EtaSequence es;
  es.gt.assign(l, std::vector<bool>(l, false));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j) es.gt[i][j] = cyclic_sum(theta.theta, i, j) < 0;
  es.eta.resize(l);
  std::iota(es.eta.begin(), es.eta.end(), 0);
  std::sort(es.eta.begin(), es.eta.end(),
            [&](int a, int b) { return es.gt[b][a]; });  // ascending
  return es;
}

IntVec b_vector(const IntVec& theta_prime, const EtaSequence& eta) {
  int l = static_cast<int>(theta_prime.size());
  if (static_cast<int>(eta.eta.size()) != l)
    throw std::invalid_argument("rank mismatch");
  IntVec b(l - 1);
  for (int k = 1; k <= l - 1; ++k) {
    long long s = cyclic_sum(theta_prime, eta.eta[k - 1], eta.eta[k]);
    if (s < 0) throw std::invalid_argument("negative b_k: eta/theta' mismatch");
    b[k - 1] = static_cast<int>(s);
  }
  return b;
}

IntVec d_vector(const StabParam& theta) {
  int l = theta.rank();
  IntVec d(l, 0);
  for (int i = 0; i < l; ++i) {
    long long v = 0;
    for (int k = 1; k <= i; ++k) v -= static_cast<long long>(k) * theta.theta[k - 1];
    for (int j = i; j <= l - 2; ++j)
      v += static_cast<long long>(l - 1 - j) * theta.theta[j];
    d[i] = static_cast<int>(v);
  }
  return d;
}

RatVec euler_constants(const DeformParam& lam) {
  int l = lam.rank();
  // c_i = c_0 + sum_{k<i} (l lambda_k - 1); sum of all c_i is 1.
  RatVec offs(l, Rat(0));
  Rat tot(0);
  for (int i = 1; i < l; ++i) {
    offs[i] = offs[i - 1] + Rat(l) * lam.lambda[i - 1] - 1;
    tot += offs[i];
  }
  Rat c0 = (Rat(1) - tot) / l;
  RatVec c(l);
  for (int i = 0; i < l; ++i) c[i] = c0 + offs[i];
  return c;
}

StabParam theta_for_order(const IntVec& eta) {
  int l = static_cast<int>(eta.size());
  check_rank(l);
  // pos(v) = 1-based position of v in the chain; theta_i = pos(i+1) - pos(i)
  // gives cyclic_sum(theta, i, j) = pos(j) - pos(i).
  IntVec pos(l);
  for (int k = 0; k < l; ++k) pos[eta[k]] = k + 1;
  IntVec th(l);
  for (int i = 0; i < l; ++i) th[i] = pos[(i + 1) % l] - pos[i];
  return StabParam(std::move(th));
}

std::vector<StabParam> alcove_representatives(int l) {
  check_rank(l);
  IntVec perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<StabParam> out;
  do {
    StabParam th = theta_for_order(perm);
    EtaSequence es = theta_order(th);
    if (es.eta != perm) throw std::logic_error("alcove representative mismatch");
    out.push_back(std::move(th));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

IntVec scaled_plus_tau(const IntVec& theta, int m, int i) {
  int l = static_cast<int>(theta.size());
  IntVec out(l);
  for (int k = 0; k < l; ++k) out[k] = m * theta[k];
  if (i != 0) {
    out[i] += 1;
    out[0] -= 1;
  }
  return out;
}

}  // namespace cyclo
