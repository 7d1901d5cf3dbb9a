#ifndef MOORESCOPE_FEASIBILITY_HPP
#define MOORESCOPE_FEASIBILITY_HPP

#include <string>
#include <vector>

#include "moorescope/bounds.hpp"

namespace moorescope {

enum class FeasibilityStatus { RuledOut, Open, KnownExists };

// Closed enumeration, one code per non-existence rule the engine applies.
enum class ReasonCode {
  EvenDegree,            // even d >= 4, D >= 4
  OrderResidue,          // odd d >= 5, D >= 4, order not divisible by D
  DegreeResidue,         // odd d >= 5, D >= 5, d ≡ 0,2 (mod D)
  ParityCongruence,      // d >= 4, even D >= 4 forces odd d
  OddPrimePowerDivisor,  // d >= 4, D >= 4 an odd prime power: D | d-1
  PowerOfTwoDivisor,     // d >= 4, D >= 4 a power of two: D/2 | d-1
  Deg4Diam3,             // the single pair (4,3)
  DegenerateFamily,      // d = 2 with D >= 3, or D = 1
};

const char* reason_code_name(ReasonCode code);

struct Reason {
  ReasonCode code;
  std::string anchor;  // self-contained statement of the rule applied
};

struct FeasibilityVerdict {
  FeasibilityStatus status;
  std::vector<Reason> reasons;       // nonempty iff RuledOut
  int upper_bound_defect;            // smallest e with N(d,D) <= M(d,D)-e implied
  std::vector<std::string> notes;    // caveats and unproven conjectures
};

const char* status_name(FeasibilityStatus s);

// Applies every non-existence rule whose hypotheses hold at defect 2 and
// collects all firing reasons. d >= 2, diam >= 1.
FeasibilityVerdict feasibility(int d, int diam);

// Residues r modulo lcm(2, diam) such that some odd d >= 5 with
// d ≡ r survives feasibility. diam >= 4. The modulus folds the
// oddness constraint in; it equals diam for even diam, 2*diam for odd.
struct ResidueRow {
  int diam;
  long modulus;
  std::vector<long> residues;  // sorted
  bool operator==(const ResidueRow& o) const = default;
};
ResidueRow residue_table(int diam);

}  // namespace moorescope

#endif
