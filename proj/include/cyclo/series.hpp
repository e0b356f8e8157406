#pragma once

#include <map>
#include <stdexcept>

namespace cyclo {

// Truncated Laurent series in q with exact integer coefficients. All
// arithmetic is confined to the window [lo, hi]; exponents outside it are
// dropped on write and read as "unknown", never as zero, so comparisons are
// only meaningful window-to-window.
class TruncatedSeries {
 public:
  TruncatedSeries(int lo, int hi) : lo_(lo), hi_(hi) {
    if (lo > hi) throw std::invalid_argument("empty series window");
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }

  void add(int exp, long long c) {
    if (c == 0 || exp < lo_ || exp > hi_) return;
    auto [it, fresh] = coeffs_.emplace(exp, c);
    if (!fresh && (it->second += c) == 0) coeffs_.erase(it);
  }

  long long coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
  }

  // Adds c * q^top / (1 - q^{-step}) = c * (q^top + q^{top-step} + ...),
  // truncated to the window.
  void add_geometric(int top, int step, long long c = 1) {
    if (step <= 0) throw std::invalid_argument("geometric step must be positive");
    for (int e = top; e >= lo_; e -= step) add(e, c);
  }

  bool operator==(const TruncatedSeries& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && coeffs_ == o.coeffs_;
  }

  const std::map<int, long long>& coeffs() const { return coeffs_; }

 private:
  int lo_, hi_;
  std::map<int, long long> coeffs_;
};

}  // namespace cyclo
