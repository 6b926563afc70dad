#ifndef RELBAT_PROBABILITY_HPP
#define RELBAT_PROBABILITY_HPP

#include <stdexcept>

#include "relbat/bits.hpp"
#include "relbat/labeling.hpp"

namespace relbat {

// Occurrence probability of a prefix: product over its positions only. Free
// coordinates contribute factor one, so this equals the total mass of all
// full extensions. Evaluation order is position 1..|p| ascending.
inline double prefix_prob(const Network& net, const Labeling& lab,
                          const Prefix& p) {
  if (p.size() > net.arc_count())
    throw std::invalid_argument("prefix longer than arc count");
  double prod = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double up = net.arc(static_cast<std::size_t>(lab.arc_at(i))).p;
    prod *= p[i] ? up : 1.0 - up;
  }
  return prod;
}

// Occurrence probability of a full state vector.
inline double vector_prob(const Network& net, const Labeling& lab,
                          const StateVector& x) {
  if (x.size() != net.arc_count())
    throw std::invalid_argument("state vector length differs from arc count");
  return prefix_prob(net, lab, x);
}

}  // namespace relbat

#endif  // RELBAT_PROBABILITY_HPP
