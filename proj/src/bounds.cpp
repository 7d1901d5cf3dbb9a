#include "moorescope/bounds.hpp"

#include <boost/multiprecision/integer.hpp>

namespace moorescope {

namespace {

// 1 + (delta-1) + ... + (delta-1)^(diam-1)
BigInt geometric_levels(int delta, int diam) {
  BigInt sum = 0;
  BigInt term = 1;
  for (int i = 0; i < diam; ++i) {
    sum += term;
    term *= delta - 1;
  }
  return sum;
}

}  // namespace

BigInt moore_bound(int delta, int diam) {
  if (delta < 2) throw DomainError("moore_bound requires delta >= 2");
  if (diam < 1) throw DomainError("moore_bound requires diam >= 1");
  return 1 + delta * geometric_levels(delta, diam);
}

BigInt regularity_threshold(int delta, int diam) {
  if (delta < 3) throw DomainError("regularity_threshold requires delta >= 3");
  if (diam < 2) throw DomainError("regularity_threshold requires diam >= 2");
  return geometric_levels(delta, diam);
}

BigInt Params::order() const {
  BigInt n = moore_bound(delta, diam) - defect;
  if (n < 1) throw DomainError("order M - defect must be >= 1");
  return n;
}

RationalCount::RationalCount(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string RationalCount::str() const {
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool n2d_stated_domain(int d, int diam) { return d >= 4 && diam >= 4; }

RationalCount n2d_count(int d, int diam) {
  if (d < 2) throw DomainError("n2d_count requires d >= 2");
  if (diam < 1) throw DomainError("n2d_count requires diam >= 1");
  BigInt n = d * geometric_levels(d, diam) - 1;  // order of a defect-2 graph
  return RationalCount(n, diam);
}

RationalCount n2d1_count_deg4(int diam) {
  if (diam < 3) throw DomainError("n2d1_count_deg4 requires diam >= 3");
  BigInt pw = 1;
  for (int i = 0; i < diam; ++i) pw *= 3;
  BigInt t = 2 * pw;
  return RationalCount(t * (t - 3), 2 * diam + 1);
}

}  // namespace moorescope
