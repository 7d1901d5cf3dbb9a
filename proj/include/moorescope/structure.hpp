#ifndef MOORESCOPE_STRUCTURE_HPP
#define MOORESCOPE_STRUCTURE_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "moorescope/cycles.hpp"
#include "moorescope/graph.hpp"

namespace moorescope {

// Union of three internally disjoint D-paths sharing both endpoints.
struct Theta {
  Vertex a;
  Vertex b;
  std::array<Path, 3> legs;

  bool contains(Vertex v) const;
};

// The three admissible short-cycle configurations around a vertex of a
// defect-2 graph:
//   I    on one (2D-1)-cycle and no other short cycle
//   II   in one Theta_D that contains every short cycle through it
//   III  on exactly two 2D-cycles meeting in a path of length <= D-1
enum class VertexTypeTag { TypeI, TypeII, TypeIII };

const char* type_tag_name(VertexTypeTag tag);

struct TypeIEvidence {
  Cycle cycle;
};
struct TypeIIEvidence {
  Theta theta;
};
struct TypeIIIEvidence {
  Cycle c1, c2;
  Path meet;
};

struct VertexClass {
  VertexTypeTag tag;
  std::variant<TypeIEvidence, TypeIIEvidence, TypeIIIEvidence> evidence;
};

// Exhaustive classification; throws ClassificationError when the
// configuration matches none of the types (the graph cannot be a
// defect-2 graph then).
VertexClass classify_vertex(const Graph& g, Vertex v, int diam);

// First Theta_D subgraph in scan order, if any.
std::optional<Theta> find_theta(const Graph& g, int diam);

// The repeat cycle of a 2D-cycle: assembled from the repeats of its
// intersections with its neighbor cycles, joined by the forced edges.
// PreconditionError when some intersection is not a path, none is shorter
// than D-1, or the intersections fail to tile the cycle; AssemblyError
// when a forced edge is absent or the assembly is not a clean 2D-cycle
// disjoint from the input.
Cycle repeat_cycle(const Graph& g, const Cycle& c, int diam);

struct SaturatingWitness {
  Vertex mu;
  Cycle cycle;
};

// Witness for the saturating-lemma conclusion on a concrete instance:
// a vertex mu adjacent to a repeat of alpha, and a cycle disjoint from c
// in which gamma and mu are repeats. The odd form takes a (2D-1)-cycle,
// the even form a 2D-cycle (whose edge hypothesis is verified first).
// HypothesisError when preconditions fail; NoWitnessError when the
// hypotheses hold but no witness exists (refuting defect-2 validity).
SaturatingWitness saturating_witness(const Graph& g, const Cycle& c,
                                     Vertex alpha, Vertex gamma, int diam);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct ConsistencyReport {
  std::vector<CheckResult> checks;
  bool pass;
  std::string first_failed;  // empty when pass

  // Classification per vertex when the typing check ran; empty otherwise.
  std::vector<std::optional<VertexClass>> types;
};

// Full structural audit of a candidate (delta, diam, -2)-graph, cheapest
// check first, short-circuiting on failure unless run_all is set.
ConsistencyReport verify_defect2(const Graph& g, int delta, int diam,
                                 bool run_all = false);

}  // namespace moorescope

#endif
