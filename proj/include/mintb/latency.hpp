#ifndef MINTB_LATENCY_HPP
#define MINTB_LATENCY_HPP

#include <vector>

#include "mintb/rational.hpp"

namespace mintb {

// Linear edge latency a*x + b with a, b >= 0 (nondecreasing).
struct LinearLatency {
  Rational slope;      // a
  Rational intercept;  // b

  Rational at(const Rational& x) const { return slope * x + intercept; }

  // Marginal cost l(x) + x*l'(x) = 2a*x + b; the social optimum is exactly a
  // Wardrop equilibrium of the instance with latencies replaced by these.
  LinearLatency marginal() const { return LinearLatency{2 * slope, intercept}; }
};

using Latencies = std::vector<LinearLatency>;

inline Latencies marginal_latencies(const Latencies& lat) {
  Latencies out;
  out.reserve(lat.size());
  for (const auto& l : lat) out.push_back(l.marginal());
  return out;
}

}  // namespace mintb

#endif
