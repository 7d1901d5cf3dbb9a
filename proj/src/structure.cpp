#include "moorescope/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "moorescope/bounds.hpp"
#include "moorescope/metrics.hpp"

namespace moorescope {

namespace {

std::uint64_t vertex_mask(const std::vector<Vertex>& vs) {
  std::uint64_t m = 0;
  for (Vertex v : vs) m |= std::uint64_t{1} << v;
  return m;
}

bool disjoint(const Cycle& a, const Cycle& b) {
  return (vertex_mask(a.vertices) & vertex_mask(b.vertices)) == 0;
}

bool cycle_has_edge(const Cycle& c, Vertex u, Vertex v) {
  int i = c.index_of(u);
  int j = c.index_of(v);
  if (i < 0 || j < 0) return false;
  int k = c.length();
  return (i + 1) % k == j || (j + 1) % k == i;
}

// The arc of `c` from p.front() to p.back() other than p itself.
Path complementary_arc(const Cycle& c, const Path& p) {
  Vertex a = p.front();
  Vertex b = p.back();
  int ia = c.index_of(a);
  int k = c.length();
  // Walk in the direction that does not start into p's interior.
  int dir = 1;
  if (p.length() >= 1) {
    Vertex second = p.vertices[1];
    dir = (c.vertices[(ia + 1) % k] == second) ? -1 : 1;
  }
  Path out;
  int idx = ia;
  out.vertices.push_back(a);
  while (c.vertices[idx] != b) {
    idx = ((idx + dir) % k + k) % k;
    out.vertices.push_back(c.vertices[idx]);
    if (static_cast<int>(out.vertices.size()) > k) {
      throw PreconditionError("arc extraction failed");
    }
  }
  return out;
}

Theta theta_from_two_cycles(const Cycle& c1, const Cycle& c2,
                            const Path& meet) {
  Theta t;
  t.a = meet.front();
  t.b = meet.back();
  t.legs[0] = meet;
  t.legs[1] = complementary_arc(c1, meet);
  t.legs[2] = complementary_arc(c2, meet);
  return t;
}

bool theta_valid(const Graph& g, const Theta& t, int diam) {
  std::uint64_t interiors = 0;
  for (const auto& leg : t.legs) {
    if (leg.length() != diam) return false;
    if (!leg.valid_in(g)) return false;
    if (!((leg.front() == t.a && leg.back() == t.b) ||
          (leg.front() == t.b && leg.back() == t.a))) {
      return false;
    }
    std::uint64_t inner = 0;
    for (std::size_t i = 1; i + 1 < leg.vertices.size(); ++i) {
      inner |= std::uint64_t{1} << leg.vertices[i];
    }
    if ((inner & interiors) != 0) return false;  // legs share an inner vertex
    if (((inner >> t.a) & 1) || ((inner >> t.b) & 1)) return false;
    interiors |= inner;
  }
  return true;
}

}  // namespace

bool Theta::contains(Vertex v) const {
  for (const auto& leg : legs) {
    if (leg.contains(v)) return true;
  }
  return false;
}

const char* type_tag_name(VertexTypeTag tag) {
  switch (tag) {
    case VertexTypeTag::TypeI: return "i";
    case VertexTypeTag::TypeII: return "ii";
    case VertexTypeTag::TypeIII: return "iii";
  }
  return "?";
}

VertexClass classify_vertex(const Graph& g, Vertex v, int diam) {
  auto cs = short_cycles_through(g, v, diam);
  const int two_d = 2 * diam;

  if (cs.size() == 1 && cs[0].length() == two_d - 1) {
    return VertexClass{VertexTypeTag::TypeI, TypeIEvidence{cs[0]}};
  }

  if (cs.size() == 2 && cs[0].length() == two_d && cs[1].length() == two_d) {
    auto meet = intersection_path(cs[0], cs[1]);
    if (meet && !meet->empty()) {
      if (meet->length() <= diam - 1) {
        return VertexClass{VertexTypeTag::TypeIII,
                           TypeIIIEvidence{cs[0], cs[1], *meet}};
      }
      if (meet->length() == diam) {
        // Two 2D-cycles glued along a D-path form a Theta_D; v must be
        // interior to the shared leg, otherwise a third cycle would pass
        // through it.
        Theta t = theta_from_two_cycles(cs[0], cs[1], *meet);
        if (theta_valid(g, t, diam) && v != t.a && v != t.b) {
          return VertexClass{VertexTypeTag::TypeII, TypeIIEvidence{t}};
        }
      }
    }
  }

  if (cs.size() == 3 && cs[0].length() == two_d && cs[1].length() == two_d &&
      cs[2].length() == two_d) {
    // Branch vertex of a Theta_D: the three pairwise intersections are its
    // legs.
    auto m01 = intersection_path(cs[0], cs[1]);
    auto m02 = intersection_path(cs[0], cs[2]);
    auto m12 = intersection_path(cs[1], cs[2]);
    if (m01 && m02 && m12 && m01->length() == diam &&
        m02->length() == diam && m12->length() == diam) {
      Theta t;
      t.legs = {*m01, *m02, *m12};
      std::set<Vertex> ends{m01->front(), m01->back(), m02->front(),
                            m02->back(), m12->front(), m12->back()};
      if (ends.size() == 2) {
        t.a = *ends.begin();
        t.b = *ends.rbegin();
        if (theta_valid(g, t, diam) && (v == t.a || v == t.b)) {
          return VertexClass{VertexTypeTag::TypeII, TypeIIEvidence{t}};
        }
      }
    }
  }

  std::ostringstream msg;
  msg << "vertex " << v << " lies on " << cs.size()
      << " short cycle(s) matching no admissible type";
  throw ClassificationError(msg.str());
}

namespace {

void exact_paths_dfs(const Graph& g, Vertex target, int remaining,
                     std::vector<Vertex>& path, std::uint64_t used,
                     std::vector<Path>& out) {
  Vertex u = path.back();
  if (remaining == 0) {
    if (u == target) out.push_back(Path{path});
    return;
  }
  for (Vertex w : g.neighbors(u)) {
    if ((used >> w) & 1) continue;
    if (w == target && remaining != 1) continue;
    path.push_back(w);
    exact_paths_dfs(g, target, remaining - 1, path, used | (std::uint64_t{1} << w), out);
    path.pop_back();
  }
}

std::vector<Path> simple_paths_exact(const Graph& g, Vertex a, Vertex b,
                                     int len) {
  std::vector<Path> out;
  std::vector<Vertex> path{a};
  exact_paths_dfs(g, b, len, path, std::uint64_t{1} << a, out);
  return out;
}

std::uint64_t interior_mask(const Path& p) {
  std::uint64_t m = 0;
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    m |= std::uint64_t{1} << p.vertices[i];
  }
  return m;
}

}  // namespace

std::optional<Theta> find_theta(const Graph& g, int diam) {
  if (diam < 2) return std::nullopt;  // Theta_1 needs a multi-edge
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      auto paths = simple_paths_exact(g, a, b, diam);
      if (paths.size() < 3) continue;
      std::vector<std::uint64_t> inner(paths.size());
      for (std::size_t i = 0; i < paths.size(); ++i) {
        inner[i] = interior_mask(paths[i]);
      }
      for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
          if (inner[i] & inner[j]) continue;
          for (std::size_t k = j + 1; k < paths.size(); ++k) {
            if ((inner[i] | inner[j]) & inner[k]) continue;
            Theta t{a, b, {paths[i], paths[j], paths[k]}};
            return t;
          }
        }
      }
    }
  }
  return std::nullopt;
}

Cycle repeat_cycle(const Graph& g, const Cycle& c, int diam) {
  const int two_d = 2 * diam;
  if (c.length() != two_d) {
    throw PreconditionError("repeat cycle is defined for 2D-cycles only");
  }

  // Neighbor cycles: every other 2D-cycle meeting c.
  std::set<Cycle> neighbor_set;
  for (Vertex x : c.vertices) {
    for (const auto& cyc : short_cycles_through(g, x, diam)) {
      if (cyc.length() == two_d && !(cyc == c)) neighbor_set.insert(cyc);
    }
  }
  if (neighbor_set.empty()) {
    throw PreconditionError("the cycle has no neighbor cycles");
  }

  std::vector<Cycle> nbs(neighbor_set.begin(), neighbor_set.end());
  std::vector<Path> meets;
  int shortest = two_d;
  for (const auto& nb : nbs) {
    auto meet = intersection_path(c, nb);
    if (!meet || meet->empty()) {
      throw PreconditionError(
          "a neighbor cycle meets the cycle in a non-path");
    }
    if (meet->length() > diam - 1) {
      throw PreconditionError(
          "a neighbor-cycle intersection is longer than D-1");
    }
    shortest = std::min(shortest, meet->length());
    meets.push_back(*meet);
  }
  if (shortest >= diam - 1) {
    throw PreconditionError(
        "every neighbor-cycle intersection is a (D-1)-path");
  }

  // The intersections must tile c: each cycle vertex in exactly one.
  std::vector<int> seg_of(g.order(), -1);
  for (std::size_t s = 0; s < meets.size(); ++s) {
    for (Vertex v : meets[s].vertices) {
      if (!c.contains(v)) {
        throw PreconditionError("intersection leaves the cycle");
      }
      if (seg_of[v] != -1) {
        throw PreconditionError(
            "a cycle vertex lies on two neighbor cycles");
      }
      seg_of[v] = static_cast<int>(s);
    }
  }
  for (Vertex v : c.vertices) {
    if (seg_of[v] == -1) {
      throw PreconditionError(
          "a cycle vertex lies on no neighbor cycle");
    }
  }

  // Walk c from a segment boundary, grouping consecutive runs.
  int start = -1;
  for (int i = 0; i < two_d; ++i) {
    int prev = seg_of[c.vertices[(i + two_d - 1) % two_d]];
    if (seg_of[c.vertices[i]] != prev) {
      start = i;
      break;
    }
  }
  if (start < 0) throw PreconditionError("intersections do not tile the cycle");

  std::vector<Vertex> assembled;
  std::vector<std::pair<int, Path>> runs;  // segment id, run in walk order
  for (int i = 0; i < two_d;) {
    int seg = seg_of[c.vertices[(start + i) % two_d]];
    Path run;
    while (i < two_d && seg_of[c.vertices[(start + i) % two_d]] == seg) {
      run.vertices.push_back(c.vertices[(start + i) % two_d]);
      ++i;
    }
    runs.emplace_back(seg, std::move(run));
  }
  if (runs.size() != meets.size()) {
    throw PreconditionError("a neighbor-cycle intersection is split around the cycle");
  }

  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto& [seg, run] = runs[r];
    Path image = rep_path_in_cycle(nbs[seg], run, diam);
    if (r > 0 && !g.adjacent(assembled.back(), image.front())) {
      std::ostringstream msg;
      msg << "forced edge " << assembled.back() << "-" << image.front()
          << " is absent";
      throw AssemblyError(msg.str());
    }
    assembled.insert(assembled.end(), image.vertices.begin(),
                     image.vertices.end());
  }
  if (!g.adjacent(assembled.back(), assembled.front())) {
    std::ostringstream msg;
    msg << "forced edge " << assembled.back() << "-" << assembled.front()
        << " is absent";
    throw AssemblyError(msg.str());
  }
  std::set<Vertex> distinct(assembled.begin(), assembled.end());
  if (static_cast<int>(assembled.size()) != two_d ||
      distinct.size() != assembled.size()) {
    throw AssemblyError("repeat assembly is not a simple 2D-cycle");
  }
  for (Vertex v : assembled) {
    if (c.contains(v)) {
      throw AssemblyError("repeat assembly meets the original cycle");
    }
  }
  return Cycle::canonical(assembled);
}

namespace {

bool repeats_in_cycle(const Cycle& c1, Vertex p, Vertex q, int diam) {
  if (!c1.contains(p) || !c1.contains(q) || p == q) return false;
  int cd = c1.cycle_distance(p, q);
  // Both arcs between them must have length <= D.
  return cd <= diam && c1.length() - cd <= diam;
}

}  // namespace

SaturatingWitness saturating_witness(const Graph& g, const Cycle& c,
                                     Vertex alpha, Vertex gamma, int diam) {
  const int two_d = 2 * diam;
  if (c.length() != two_d && c.length() != two_d - 1) {
    throw HypothesisError("cycle length must be 2D-1 or 2D");
  }
  if (!c.contains(alpha)) throw HypothesisError("alpha is not on the cycle");
  if (c.contains(gamma)) throw HypothesisError("gamma lies on the cycle");
  if (!g.adjacent(alpha, gamma)) {
    throw HypothesisError("gamma is not a neighbor of alpha");
  }

  std::vector<Vertex> rep_candidates;
  if (c.length() == two_d - 1) {
    // Odd form: the two repeat vertices of alpha, at arc splits {D-1, D}.
    int i = c.index_of(alpha);
    rep_candidates.push_back(c.vertices[(i + diam - 1) % c.length()]);
    rep_candidates.push_back(c.vertices[(i + c.length() - (diam - 1)) % c.length()]);
  } else {
    // Even form: verify the edge hypothesis first.
    for (const auto& cyc : short_cycles_through(g, alpha, diam)) {
      if (!cycle_has_edge(cyc, alpha, gamma)) continue;
      auto meet = intersection_path(c, cyc);
      if (!meet) {
        throw HypothesisError(
            "a short cycle through the edge meets the cycle in a non-path");
      }
      if (meet->length() > diam - 2) {
        throw HypothesisError(
            "a short cycle through the edge meets the cycle at a path "
            "longer than D-2");
      }
    }
    rep_candidates.push_back(rep_in_cycle(c, alpha, diam));
  }
  std::sort(rep_candidates.begin(), rep_candidates.end());

  const bool want_even_cycle_only = c.length() == two_d - 1;
  auto gamma_cycles = short_cycles_through(g, gamma, diam);
  for (Vertex alpha_rep : rep_candidates) {
    for (Vertex mu : g.neighbors(alpha_rep)) {
      if (c.contains(mu)) continue;
      for (const auto& c1 : gamma_cycles) {
        if (want_even_cycle_only && c1.length() != two_d) continue;
        if (!repeats_in_cycle(c1, gamma, mu, diam)) continue;
        bool meets_c = false;
        for (Vertex v : c1.vertices) {
          if (c.contains(v)) meets_c = true;
        }
        if (!meets_c) return SaturatingWitness{mu, c1};
      }
    }
  }
  throw NoWitnessError("no witness pair exists for this instance");
}

namespace {

std::string int_or_inf(int x) {
  return x == kInfDist ? "inf" : std::to_string(x);
}

}  // namespace

ConsistencyReport verify_defect2(const Graph& g, int delta, int diam,
                                 bool run_all) {
  ConsistencyReport report;
  report.pass = true;
  bool stopped = false;

  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    if (stopped) return;
    report.checks.push_back({name, ok, detail});
    if (!ok && report.pass) {
      report.pass = false;
      report.first_failed = name;
      if (!run_all) stopped = true;
    }
  };

  const int two_d = 2 * diam;
  const bool structural = delta >= 3 && diam >= 2;

  {
    BigInt want = moore_bound(delta, diam) - 2;
    bool ok = BigInt(g.order()) == want;
    add("order", ok,
        "order " + std::to_string(g.order()) + ", expected " + want.str());
  }

  {
    auto ds = degree_stats(g);
    add("max-degree", ds.max_degree == delta,
        "max degree " + std::to_string(ds.max_degree) + ", expected " +
            std::to_string(delta));
    if (structural) {
      add("regularity", ds.is_regular,
          ds.is_regular ? "regular of degree " + std::to_string(ds.max_degree)
                        : "degrees range " + std::to_string(ds.min_degree) +
                              ".." + std::to_string(ds.max_degree));
    }
  }

  {
    int d = diameter(g);
    add("diameter", d == diam,
        "diameter " + int_or_inf(d) + ", expected " + std::to_string(diam));
  }

  int gth = kInfDist;
  if (!stopped || run_all) gth = girth(g);
  if (structural) {
    add("girth-window", gth >= two_d - 1 && gth <= two_d,
        "girth " + int_or_inf(gth) + ", window [" + std::to_string(two_d - 1) +
            ", " + std::to_string(two_d) + "]");
  }
  if ((delta >= 4 && diam >= 4) || (delta == 4 && diam == 3)) {
    add("girth-2d", gth == two_d,
        "girth " + int_or_inf(gth) + ", required exactly " +
            std::to_string(two_d));
  }
  if (delta >= 4 && ((diam >= 4) || (delta == 4 && diam >= 3))) {
    if (!stopped || run_all) {
      auto t = find_theta(g, diam);
      add("theta-free", !t.has_value(),
          t ? "contains a Theta_D with branch vertices " +
                  std::to_string(t->a) + "," + std::to_string(t->b)
            : "no Theta_D subgraph");
    }
  }

  if (structural && (!stopped || run_all)) {
    report.types.assign(g.order(), std::nullopt);
    int unclassified = -1;
    std::string why;
    for (Vertex v = 0; v < g.order() && unclassified < 0; ++v) {
      try {
        report.types[v] = classify_vertex(g, v, diam);
      } catch (const ClassificationError& e) {
        unclassified = v;
        why = e.what();
      }
    }
    add("vertex-types", unclassified < 0,
        unclassified < 0 ? "all vertices classified" : why);

    if (!stopped || run_all) {
      bool homogeneous = true;
      std::string detail = "every short cycle has a single vertex type";
      if (unclassified >= 0) {
        homogeneous = false;
        detail = "depends on vertex-types";
      } else {
        for (const auto& cyc : all_cycles_upto(g, two_d)) {
          VertexTypeTag t0 = report.types[cyc.vertices[0]]->tag;
          for (Vertex v : cyc.vertices) {
            if (report.types[v]->tag != t0) {
              homogeneous = false;
              detail = "mixed types on a " + std::to_string(cyc.length()) +
                       "-cycle";
            }
          }
        }
      }
      add("same-cycle-same-type", homogeneous, detail);
    }

    if (delta >= 4 && diam >= 4 && (!stopped || run_all)) {
      bool all_iii = unclassified < 0;
      for (Vertex v = 0; all_iii && v < g.order(); ++v) {
        all_iii = report.types[v]->tag == VertexTypeTag::TypeIII;
      }
      add("all-type-iii", all_iii,
          all_iii ? "every vertex on exactly two 2D-cycles"
                  : "a vertex is not of type (iii)");
    }

    if (delta == 4 && diam >= 3 && (!stopped || run_all)) {
      // In a valid (4,D>=3,-2)-graph the two distance-D vertices on a
      // vertex's two 2D-cycles are never adjacent.
      bool ok = unclassified < 0;
      std::string detail = ok ? "no adjacent antipode pair"
                              : "depends on vertex-types";
      for (Vertex v = 0; ok && v < g.order(); ++v) {
        const auto* ev = std::get_if<TypeIIIEvidence>(&report.types[v]->evidence);
        if (ev == nullptr) {
          ok = false;
          detail = "depends on all vertices being type (iii)";
          break;
        }
        Vertex y1 = rep_in_cycle(ev->c1, v, diam);
        Vertex y2 = rep_in_cycle(ev->c2, v, diam);
        if (g.adjacent(y1, y2)) {
          ok = false;
          detail = "antipodes " + std::to_string(y1) + "," +
                   std::to_string(y2) + " of vertex " + std::to_string(v) +
                   " are adjacent";
        }
      }
      add("antipode-nonadjacency", ok, detail);
    }
  }

  return report;
}

}  // namespace moorescope
