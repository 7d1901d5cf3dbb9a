#ifndef MOORESCOPE_BOUNDS_HPP
#define MOORESCOPE_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "moorescope/errors.hpp"

namespace moorescope {

using BigInt = boost::multiprecision::cpp_int;

// Degree/diameter parameters with the derived target order M(delta,diam)-defect.
struct Params {
  int delta;
  int diam;
  int defect;

  BigInt order() const;  // throws DomainError when the order would be < 1
};

// M(delta, D) = 1 + delta * (1 + (delta-1) + ... + (delta-1)^(D-1)).
// Exact for any diam (no overflow); delta >= 2, diam >= 1.
BigInt moore_bound(int delta, int diam);

// T = 1 + (delta-1) + ... + (delta-1)^(D-1); any defect < T forces a
// regular graph. delta >= 3, diam >= 2.
BigInt regularity_threshold(int delta, int diam);

// Reduced fraction with positive denominator; exact.
struct RationalCount {
  BigInt num;
  BigInt den;

  RationalCount(BigInt n, BigInt d);
  bool is_integer() const { return den == 1; }
  bool integer_is_even() const { return is_integer() && num % 2 == 0; }
  std::string str() const;
  bool operator==(const RationalCount& o) const {
    return num == o.num && den == o.den;
  }
};

// Count of 2D-cycles a defect-2 graph of degree d and diameter D would
// have to contain: (d*(1+(d-1)+...+(d-1)^(D-1)) - 1) / D. The closed form
// is established for d >= 4, D >= 4; see n2d_stated_domain.
RationalCount n2d_count(int d, int diam);
bool n2d_stated_domain(int d, int diam);

// Count of (2D+1)-cycles a defect-2 graph of degree 4 and diameter D >= 3
// would have to contain: 2*3^D * (2*3^D - 3) / (2D+1).
RationalCount n2d1_count_deg4(int diam);

}  // namespace moorescope

#endif
