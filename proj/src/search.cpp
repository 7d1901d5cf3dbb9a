#include "moorescope/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <set>
#include <thread>

#include "moorescope/bounds.hpp"
#include "moorescope/canonical.hpp"
#include "moorescope/graph6.hpp"
#include "moorescope/metrics.hpp"

namespace moorescope {

SearchConfig SearchConfig::make(int delta, int diam, int defect) {
  if (delta < 2) throw DomainError("search requires delta >= 2");
  if (diam < 1) throw DomainError("search requires diam >= 1");
  if (defect < 0) throw DomainError("search requires defect >= 0");
  BigInt n = moore_bound(delta, diam) - defect;
  if (n < 1) throw InfeasibleConfig("target order M - defect is below 1");
  if (n > kMaxVertices) {
    throw SizeError("target order " + n.str() + " exceeds desk scale (62)");
  }
  SearchConfig cfg;
  cfg.delta = delta;
  cfg.diam = diam;
  cfg.defect = defect;
  cfg.order = static_cast<int>(n);
  // Sound girth floor: a vertex on a cycle of length <= 2D-defect would
  // collect more repeat surplus than the defect allows.
  cfg.girth_min = defect <= 2 ? std::max(3, 2 * diam + 1 - defect) : 3;
  BigInt threshold = 0;
  BigInt term = 1;
  for (int i = 0; i < diam; ++i) {
    threshold += term;
    term *= delta - 1;
  }
  cfg.force_regular = BigInt(defect) < threshold;
  return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Frontier {
  std::array<std::uint64_t, 64> adj;
  std::array<std::int8_t, 64> deg;
  std::array<bool, 64> closed;
  std::uint64_t unsat_mask;
  int touched;
  int edges;
  int prev_u;
  int watermark;
};

class Searcher {
 public:
  Searcher(const SearchConfig& cfg, std::atomic<std::uint64_t>* node_counter,
           std::atomic<bool>* stop_flag)
      : cfg_(cfg),
        n_(cfg.order),
        d_(cfg.delta),
        node_counter_(node_counter),
        stop_flag_(stop_flag) {
    adj_.fill(0);
    deg_.fill(0);
    closed_.fill(false);
    unsat_mask_ = (n_ >= 64) ? ~std::uint64_t{0}
                             : ((std::uint64_t{1} << n_) - 1);
    touched_ = 1;
    edges_ = 0;
    // Optimistic subtree size below one free slot, by remaining depth.
    btab_.assign(cfg.diam + 1, 1);
    long b = 1;
    long term = 1;
    for (int t = 1; t <= cfg.diam; ++t) {
      term *= std::max(1, d_ - 1);
      b = std::min<long>(b + term, n_);
      btab_[t] = b;
    }
    if (cfg.limits.max_seconds > 0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
          std::chrono::duration<double>(cfg.limits.max_seconds));
      has_deadline_ = true;
    }
  }

  void restore(const Frontier& f) {
    adj_ = f.adj;
    deg_ = f.deg;
    closed_ = f.closed;
    unsat_mask_ = f.unsat_mask;
    touched_ = f.touched;
    edges_ = f.edges;
  }

  void run() { visit(-1, 0); }
  void resume(const Frontier& f) { visit(f.prev_u, f.watermark); }

  // Same traversal, cut at `depth` edges; frontier states out.
  void collect(int depth, std::vector<Frontier>& out) {
    collect_depth_ = depth;
    collecting_ = &out;
    visit(-1, 0);
    collecting_ = nullptr;
  }

  SearchStats stats;
  std::vector<std::string> raw_solutions;  // discovery order, may repeat
  bool hit_limit = false;

 private:
  bool limit_hit() {
    if (stop_flag_->load(std::memory_order_relaxed)) {
      hit_limit = true;
      return true;
    }
    if (has_deadline_ && (stats.nodes & 0xfff) == 0 &&
        Clock::now() > deadline_) {
      stop_flag_->store(true, std::memory_order_relaxed);
      hit_limit = true;
      return true;
    }
    return false;
  }

  void count_node() {
    ++stats.nodes;
    if (cfg_.limits.max_nodes > 0) {
      if (node_counter_->fetch_add(1, std::memory_order_relaxed) + 1 >=
          cfg_.limits.max_nodes) {
        stop_flag_->store(true, std::memory_order_relaxed);
      }
    }
  }

  bool settled(int v) const {
    return deg_[v] == d_ || (!cfg_.force_regular && closed_[v]);
  }

  int lowest_unsettled() const {
    std::uint64_t m = unsat_mask_;
    return m == 0 ? n_ : std::countr_zero(m);
  }

  void add_edge(int u, int v) {
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    ++deg_[u];
    ++deg_[v];
    ++edges_;
    if (deg_[u] == d_) unsat_mask_ &= ~(std::uint64_t{1} << u);
    if (deg_[v] == d_) unsat_mask_ &= ~(std::uint64_t{1} << v);
  }

  void remove_edge(int u, int v) {
    if (deg_[u] == d_) unsat_mask_ |= std::uint64_t{1} << u;
    if (deg_[v] == d_) unsat_mask_ |= std::uint64_t{1} << v;
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
    --deg_[u];
    --deg_[v];
    --edges_;
  }

  // Would edge (u,v) close a cycle shorter than girth_min?
  bool creates_short_cycle(int u, int v) const {
    if (cfg_.girth_min <= 3) return false;
    std::uint64_t seen = std::uint64_t{1} << u;
    std::uint64_t frontier = seen;
    for (int depth = 1; depth <= cfg_.girth_min - 2; ++depth) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int w = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[w];
      }
      next &= ~seen;
      if ((next >> v) & 1) return true;
      seen |= next;
      frontier = next;
      if (!frontier) return false;
    }
    return false;
  }

  int free_slots(int v) const {
    if (!cfg_.force_regular && closed_[v]) return 0;
    return d_ - deg_[v];
  }

  // Optimistic count of vertices the finished graph could hold within
  // distance diam of s: the current ball plus subtree bounds per free slot.
  bool reach_ok(int s) const {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    long count = 1;
    long slack = 0;
    for (int k = 0; k < cfg_.diam; ++k) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int w = std::countr_zero(f);
        f &= f - 1;
        slack += free_slots(w) * btab_[cfg_.diam - 1 - k];
        next |= adj_[w];
      }
      next &= ~seen;
      count += std::popcount(next);
      if (count + slack >= n_) return true;
      seen |= next;
      frontier = next;
      if (!frontier) break;
    }
    return count + slack >= n_;
  }

  bool reach_checks(int u, int v) {
    bool full = 2 * edges_ >= n_;  // second half: sweep every settled vertex
    if (full) {
      for (int s = 0; s < touched_; ++s) {
        if (settled(s) && !reach_ok(s)) return false;
      }
      return true;
    }
    if (settled(u) && !reach_ok(u)) return false;
    if (v >= 0 && settled(v) && !reach_ok(v)) return false;
    if (u != 0 && v != 0 && settled(0) && !reach_ok(0)) return false;
    return true;
  }

  void leaf() {
    ++stats.leaves;
    if (!cfg_.force_regular) {
      int maxdeg = 0;
      for (int v = 0; v < n_; ++v) maxdeg = std::max(maxdeg, int(deg_[v]));
      if (maxdeg != d_) return;
    }
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
      std::uint64_t m = adj_[u] >> (u + 1) << (u + 1);
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        g.add_edge(u, v);
      }
    }
    if (diameter(g) != cfg_.diam) return;
    raw_solutions.push_back(canonical_form(g).graph6);
  }

  void visit(int prev_u, int watermark) {
    if (limit_hit()) return;
    int u = lowest_unsettled();
    if (u == n_) {
      leaf();
      return;
    }
    if (u >= touched_) {
      // Touched prefix saturated while vertices remain: disconnected.
      ++stats.disconnect_prunes;
      return;
    }
    if (collecting_ != nullptr && edges_ == collect_depth_) {
      Frontier f;
      f.adj = adj_;
      f.deg = deg_;
      f.closed = closed_;
      f.unsat_mask = unsat_mask_;
      f.touched = touched_;
      f.edges = edges_;
      f.prev_u = prev_u;
      f.watermark = watermark;
      collecting_->push_back(f);
      return;
    }

    int start = (u == prev_u) ? watermark : u + 1;
    std::uint64_t range =
        (touched_ >= 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << touched_) - 1);
    if (start < 64) {
      range &= ~((std::uint64_t{1} << start) - 1);
    } else {
      range = 0;
    }
    std::uint64_t cand = unsat_mask_ & ~adj_[u] & range;

    if (cfg_.force_regular) {
      int needed = d_ - deg_[u];
      int avail = std::popcount(cand) + (n_ - touched_);
      if (avail < needed) {
        ++stats.degree_prunes;
        return;
      }
    }

    std::uint64_t c = cand;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      if (limit_hit()) return;
      if (creates_short_cycle(u, v)) {
        ++stats.girth_prunes;
        continue;
      }
      add_edge(u, v);
      count_node();
      if (reach_checks(u, v)) {
        visit(u, v + 1);
      } else {
        ++stats.reach_prunes;
      }
      remove_edge(u, v);
    }

    if (touched_ < n_ && !limit_hit()) {
      int v = touched_;
      add_edge(u, v);
      ++touched_;
      count_node();
      if (reach_checks(u, v)) {
        visit(u, v + 1);
      } else {
        ++stats.reach_prunes;
      }
      --touched_;
      remove_edge(u, v);
    }

    if (!cfg_.force_regular && (deg_[u] >= 1 || n_ == 1) && !limit_hit()) {
      closed_[u] = true;
      unsat_mask_ &= ~(std::uint64_t{1} << u);
      count_node();
      if (reach_checks(u, -1)) {
        visit(-1, 0);
      } else {
        ++stats.reach_prunes;
      }
      unsat_mask_ |= std::uint64_t{1} << u;
      closed_[u] = false;
    }
  }

  const SearchConfig& cfg_;
  int n_;
  int d_;
  std::array<std::uint64_t, 64> adj_;
  std::array<std::int8_t, 64> deg_;
  std::array<bool, 64> closed_;
  std::uint64_t unsat_mask_;
  int touched_;
  int edges_;
  std::vector<long> btab_;
  std::atomic<std::uint64_t>* node_counter_;
  std::atomic<bool>* stop_flag_;
  bool has_deadline_ = false;
  Clock::time_point deadline_;
  std::vector<Frontier>* collecting_ = nullptr;
  int collect_depth_ = 0;
};

void accumulate(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.leaves += from.leaves;
  into.girth_prunes += from.girth_prunes;
  into.reach_prunes += from.reach_prunes;
  into.degree_prunes += from.degree_prunes;
  into.disconnect_prunes += from.disconnect_prunes;
  into.duplicate_solutions += from.duplicate_solutions;
}

}  // namespace

SearchResult enumerate_defect_graphs(const SearchConfig& cfg) {
  SearchResult result;
  if (cfg.order <= cfg.delta) {
    // Max degree delta needs at least delta+1 vertices.
    return result;
  }
  if (cfg.force_regular && (cfg.order * cfg.delta) % 2 != 0) {
    return result;  // no regular graph of odd degree sum
  }

  std::atomic<std::uint64_t> node_counter{0};
  std::atomic<bool> stop_flag{false};

  std::vector<std::string> merged;
  SearchStats stats;
  bool hit_limit = false;

  int jobs = std::max(1, cfg.jobs);
  int target_edges = cfg.force_regular ? cfg.order * cfg.delta / 2 : 0;
  if (jobs == 1 || target_edges < 10) {
    Searcher s(cfg, &node_counter, &stop_flag);
    s.run();
    merged = std::move(s.raw_solutions);
    stats = s.stats;
    hit_limit = s.hit_limit;
  } else {
    // Split the tree at a fixed depth; subtree results concatenate in
    // frontier order, so parallel output equals serial output.
    int split_depth = std::min(8, target_edges / 2);
    Searcher collector(cfg, &node_counter, &stop_flag);
    std::vector<Frontier> frontier;
    collector.collect(split_depth, frontier);
    stats = collector.stats;
    hit_limit = collector.hit_limit;

    std::vector<std::vector<std::string>> sols(frontier.size());
    std::vector<SearchStats> sub(frontier.size());
    std::vector<char> sub_limit(frontier.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= frontier.size()) return;
        Searcher s(cfg, &node_counter, &stop_flag);
        s.restore(frontier[i]);
        s.resume(frontier[i]);
        sols[i] = std::move(s.raw_solutions);
        sub[i] = s.stats;
        sub_limit[i] = s.hit_limit ? 1 : 0;
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      accumulate(stats, sub[i]);
      if (sub_limit[i]) hit_limit = true;
      for (auto& s : sols[i]) merged.push_back(std::move(s));
    }
  }

  std::set<std::string> seen;
  for (auto& s : merged) {
    if (seen.insert(s).second) {
      result.solutions.push_back(std::move(s));
    } else {
      ++stats.duplicate_solutions;
    }
  }
  result.stats = stats;
  result.exhaustive = !hit_limit;
  return result;
}

namespace {

// Row-wise labeled generation: pick vertex u's higher-indexed neighbors as
// a combination filling its remaining degree, recurse.
struct BruteGen {
  const int n;
  const int d;
  const std::function<bool(const Graph&)>& pred;
  std::array<std::uint64_t, 16> adj{};
  std::vector<int> rem;
  std::map<std::string, Graph> found;

  BruteGen(int n_, int d_, const std::function<bool(const Graph&)>& p)
      : n(n_), d(d_), pred(p), rem(n_, d_) {}

  void choose(int u, int needed, int from) {
    if (needed == 0) {
      vertex_done(u + 1);
      return;
    }
    if (n - from < needed) return;
    for (int v = from; v < n; ++v) {
      if (rem[v] == 0) continue;
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
      --rem[v];
      choose(u, needed - 1, v + 1);
      ++rem[v];
      adj[u] &= ~(std::uint64_t{1} << v);
      adj[v] &= ~(std::uint64_t{1} << u);
    }
  }

  void vertex_done(int u) {
    if (u == n) {
      Graph g(n);
      for (int a = 0; a < n; ++a) {
        std::uint64_t m = adj[a] >> (a + 1) << (a + 1);
        while (m) {
          int b = std::countr_zero(m);
          m &= m - 1;
          g.add_edge(a, b);
        }
      }
      if (pred(g)) {
        found.emplace(canonical_form(g).graph6, std::move(g));
      }
      return;
    }
    choose(u, rem[u], u + 1);
  }
};

}  // namespace

std::vector<Graph> brute_force_filter(
    int order, int degree,
    const std::function<bool(const Graph&)>& predicate) {
  if (order < 1 || order > 12) {
    throw DomainError("brute_force_filter is guarded to 1 <= order <= 12");
  }
  if (degree < 0 || degree >= order) {
    return {};  // no d-regular graph without d+1 vertices
  }
  if ((order * degree) % 2 != 0) return {};
  BruteGen gen(order, degree, predicate);
  gen.vertex_done(0);
  std::vector<Graph> out;
  for (auto& [key, g] : gen.found) out.push_back(std::move(g));
  return out;
}

}  // namespace moorescope
