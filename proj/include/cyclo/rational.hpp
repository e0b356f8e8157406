#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cyclo {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<int>;

// Canonical "p/q" form, lowest terms, positive denominator; integers print
// without the "/1".
std::string rat_to_string(const Rat& r);

// Accepts "p", "p/q" and signs; throws std::invalid_argument on junk or q = 0.
Rat rat_from_string(const std::string& s);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool in_nonpositive_integers(const Rat& r) {
  return is_integer(r) && r <= 0;
}

long long binomial(long long n, long long k);

}  // namespace cyclo
