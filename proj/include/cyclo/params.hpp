#pragma once

#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

// Number of vertices of the cyclic quiver. l = 1 has no nontrivial cyclic
// intervals, so it is rejected at construction.
void check_rank(int l);

// Exact deformation parameter lambda with sum 1; lambda_bar subtracts 1 at
// slot 0.
struct DeformParam {
  explicit DeformParam(RatVec lambda);
  static DeformParam from_kappa(const RatVec& kappa);  // lambda_i = k_{i+1} - k_i + 1/l

  int rank() const { return static_cast<int>(lambda.size()); }
  RatVec lambda;
  RatVec lambda_bar;
};

// Integer stability parameter with sum 0.
struct StabParam {
  explicit StabParam(IntVec theta);
  int rank() const { return static_cast<int>(theta.size()); }
  IntVec theta;
};

// v_i + v_{i+1} + ... + v_{j-1}, indices mod l, wrapping once when j < i;
// i = j gives 0.
Rat cyclic_sum(const RatVec& v, int i, int j);
long long cyclic_sum(const IntVec& v, int i, int j);

struct LambdaClass {
  bool in_Rreg = false;        // all cyclic lambda_bar sums nonzero
  bool in_tilde_Rreg = false;  // additionally all cyclic lambda sums nonzero
};
LambdaClass classify_lambda(const DeformParam& lam);

// true iff all cyclic interval sums of theta are nonzero.
bool classify_theta(const StabParam& theta);

// Membership in Z^l_lambda; requires regular theta.
bool in_alcove_set(const DeformParam& lam, const StabParam& theta);

// rel[i][j] = true iff i >_{rep,lambda} j, i.e. the cyclic lambda sum from i
// to j-1 is a nonpositive integer (i != j).
std::vector<std::vector<bool>> rep_order(const DeformParam& lam);

// Total order cut out by a regular theta: i > j iff the cyclic theta sum from
// i to j-1 is negative. eta lists the vertices increasing along the order,
// eta[0] = eta_1 minimal, eta[l-1] = eta_l maximal.
struct EtaSequence {
  IntVec eta;
  std::vector<std::vector<bool>> gt;  // gt[i][j]: i > j
  int position(int vertex) const;     // 1-based position: eta_{pos} = vertex
};
EtaSequence theta_order(const StabParam& theta);

// b_k = cyclic sum of theta' from eta_k to eta_{k+1}-1, k = 1..l-1 (0-indexed
// result). Throws if any entry is negative (eta/theta' mismatch).
IntVec b_vector(const IntVec& theta_prime, const EtaSequence& eta);

// d_i = -sum_{k=1..i} k theta_{k-1} + sum_{j=i..l-2} (l-1-j) theta_j.
IntVec d_vector(const StabParam& theta);

// Unique solution of c_{i+1} - c_i = l lambda_i - 1, sum c_i = 1.
RatVec euler_constants(const DeformParam& lam);

// One regular theta per total order on {0..l-1}: (l-1)! representatives with
// eta_1 = 0 fixed up to rotation... every order appears exactly once.
std::vector<StabParam> alcove_representatives(int l);

// theta realizing a prescribed eta-chain (eta[k] = eta_{k+1}).
StabParam theta_for_order(const IntVec& eta);

inline IntVec tau_vector(int l, int i) {
  IntVec t(l, 0);
  if (i != 0) {
    t[i] = 1;
    t[0] = -1;
  }
  return t;
}

IntVec scaled_plus_tau(const IntVec& theta, int m, int i);  // m*theta + tau_i

}  // namespace cyclo
