#include "moorescope/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace moorescope {

namespace {

bool is_power_of_odd_prime(long x) {
  if (x < 3) return false;
  // Trial factorization; diameters are tiny.
  for (long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      return x == 1 && p % 2 == 1;
    }
  }
  return x % 2 == 1;  // x itself prime
}

bool is_power_of_two(long x) { return x > 0 && (x & (x - 1)) == 0; }

struct CataloguePair {
  int d, diam;
  const char* what;
};

// The known defect-2 graphs. Data, not logic; the search module
// rediscovers each entry at test time.
constexpr CataloguePair kCatalogue[] = {
    {2, 2, "the path on 3 vertices"},
    {3, 2, "two cubic graphs on 8 vertices"},
    {3, 3, "a unique cubic graph on 20 vertices"},
    {4, 2, "a unique 4-regular graph on 15 vertices"},
    {5, 2, "a unique 5-regular graph on 24 vertices"},
};

bool in_catalogue(int d, int diam) {
  for (const auto& c : kCatalogue) {
    if (c.d == d && c.diam == diam) return true;
  }
  return false;
}

}  // namespace

const char* reason_code_name(ReasonCode code) {
  switch (code) {
    case ReasonCode::EvenDegree: return "even-degree";
    case ReasonCode::OrderResidue: return "order-residue";
    case ReasonCode::DegreeResidue: return "degree-residue";
    case ReasonCode::ParityCongruence: return "parity-congruence";
    case ReasonCode::OddPrimePowerDivisor: return "odd-prime-power-divisor";
    case ReasonCode::PowerOfTwoDivisor: return "power-of-two-divisor";
    case ReasonCode::Deg4Diam3: return "deg4-diam3";
    case ReasonCode::DegenerateFamily: return "degenerate-family";
  }
  return "?";
}

const char* status_name(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::RuledOut: return "RuledOut";
    case FeasibilityStatus::Open: return "Open";
    case FeasibilityStatus::KnownExists: return "KnownExists";
  }
  return "?";
}

FeasibilityVerdict feasibility(int d, int diam) {
  if (d < 2) throw DomainError("feasibility requires d >= 2");
  if (diam < 1) throw DomainError("feasibility requires diam >= 1");

  FeasibilityVerdict v;
  auto fire = [&](ReasonCode code, std::string anchor) {
    v.reasons.push_back({code, std::move(anchor)});
  };

  if (diam == 1 || (d == 2 && diam >= 3)) {
    fire(ReasonCode::DegenerateFamily,
         "no defect-2 graphs exist at degree 2 with diameter >= 3, nor at "
         "diameter 1");
  }
  if (d == 4 && diam == 3) {
    fire(ReasonCode::Deg4Diam3,
         "no graph of degree 4, diameter 3 and defect 2 exists: the forced "
         "7-cycle count 2754/7 is not an integer");
  }
  if (d % 2 == 0 && d >= 4 && diam >= 4) {
    fire(ReasonCode::EvenDegree,
         "no defect-2 graph has even degree >= 4 and diameter >= 4: the "
         "2D-cycle count would be odd, but repeat cycles pair them up");
  }
  if (d >= 4 && diam >= 4) {
    // Congruence restrictions; valid where every vertex lies on exactly
    // two 2D-cycles, i.e. d >= 4, D >= 4.
    if (diam % 2 == 0 && d % 2 == 0) {
      fire(ReasonCode::ParityCongruence,
           "for even diameter >= 4, the degree of a defect-2 graph must be "
           "odd");
    }
    if (is_power_of_odd_prime(diam) && (d - 1) % diam != 0) {
      fire(ReasonCode::OddPrimePowerDivisor,
           "when the diameter is a power of an odd prime, degree minus one "
           "must be a multiple of the diameter");
    }
    if (diam >= 4 && is_power_of_two(diam) && (d - 1) % (diam / 2) != 0) {
      fire(ReasonCode::PowerOfTwoDivisor,
           "when the diameter >= 4 is a power of two, degree minus one must "
           "be a multiple of half the diameter");
    }
  }
  bool order_residue_fires = false;
  if (d % 2 == 1 && d >= 5 && diam >= 4) {
    RationalCount n2d = n2d_count(d, diam);  // order / D, reduced
    if (!n2d.is_integer()) {
      order_residue_fires = true;
      fire(ReasonCode::OrderResidue,
           "a defect-2 graph of odd degree >= 5 and diameter D >= 4 must "
           "have order divisible by D; here the quotient is " + n2d.str());
    }
    if (diam >= 5 && (d % diam == 0 || d % diam == 2)) {
      fire(ReasonCode::DegreeResidue,
           "no defect-2 graph of odd degree >= 5 and diameter D >= 5 has "
           "degree congruent to 0 or 2 modulo D");
    }
  }

  if (in_catalogue(d, diam)) {
    v.status = FeasibilityStatus::KnownExists;
    v.reasons.clear();
  } else {
    v.status = v.reasons.empty() ? FeasibilityStatus::Open
                                 : FeasibilityStatus::RuledOut;
  }

  // Smallest defect e such that N(d,D) <= M(d,D) - e is implied by what is
  // proven. Moore graphs: degree 2 (odd cycles), diameter 1 (complete
  // graphs), diameter 2 at degree 3 and 7, possibly 57. Defect 1 exists
  // only at degree 2. Defect 3 at odd degree is barred by parity once
  // regularity is forced.
  bool moore_possible =
      d == 2 || diam == 1 || (diam == 2 && (d == 3 || d == 7 || d == 57));
  if (moore_possible) {
    v.upper_bound_defect = 0;
  } else {
    v.upper_bound_defect = 2;
    if (v.status == FeasibilityStatus::RuledOut) {
      v.upper_bound_defect = 3;
      if (d % 2 == 1 && d >= 5 && diam >= 4 && order_residue_fires) {
        v.upper_bound_defect = 4;
      }
    }
  }

  if (d == 2 && diam == 2) {
    v.notes.push_back(
        "degenerate case: the order-3 path realizes defect 2 at degree 2, "
        "diameter 2, even though the degree-2 family otherwise admits no "
        "defect-2 members");
  }
  if (d == 57 && diam == 2) {
    v.notes.push_back(
        "whether a Moore graph of degree 57 and diameter 2 exists is an "
        "open question; the defect-2 question at this pair is untouched");
  }
  if (d >= 6 && diam == 2 && v.status == FeasibilityStatus::Open) {
    v.notes.push_back(
        "conjectured (unproven): no defect-2 graphs of degree >= 6 at "
        "diameter 2");
  }
  if (d >= 4 && diam >= 4 && v.status == FeasibilityStatus::Open) {
    v.notes.push_back(
        "conjectured (unproven): no defect-2 graphs with degree >= 4 and "
        "diameter >= 4");
    if (d % 2 == 1 && d >= 5) {
      v.notes.push_back(
          "conjectured (unproven): at odd degree >= 5 and diameter >= 4 the "
          "order bound improves to the Moore bound minus 4");
    }
  }

  return v;
}

ResidueRow residue_table(int diam) {
  if (diam < 4) throw DomainError("residue_table requires diam >= 4");
  long modulus = std::lcm<long>(2, diam);
  ResidueRow row{diam, modulus, {}};
  for (long r = 1; r < modulus; r += 2) {
    // The verdict for odd d >= 5 at this diameter depends only on
    // d mod lcm(2, diam); any representative decides the residue class.
    long rep = r >= 5 ? r : r + modulus;
    if (feasibility(static_cast<int>(rep), diam).status ==
        FeasibilityStatus::Open) {
      row.residues.push_back(r);
    }
  }
  return row;
}

}  // namespace moorescope
