#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coxcay/cayley.hpp"
#include "coxcay/localaction.hpp"

namespace coxcay {

namespace detail {

struct OracleSearch {
  const CayleyBall& ball;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::vector<int>> adj;        // in-ball neighbor lists
  std::vector<std::vector<int>> fix_dist;   // BFS distance from each fixed vertex
  std::vector<int> order;                   // assignment order
  std::vector<int> pos_in_order;            // vertex -> its position, for pruning
  std::vector<int> img, pre;                // current partial map and inverse
  std::vector<std::vector<int>> solutions;
  std::vector<int> twin_class;              // vertex -> boundary twin class, or -1
  std::vector<std::vector<int>> twin_members;  // members ascending
  bool twin_rule = false;

  OracleSearch(const CayleyBall& b, const std::vector<int>& fix, std::uint64_t max_nodes,
               bool mod_twins = false)
      : ball(b), budget(max_nodes) {
    const int n = static_cast<int>(ball.size());
    adj.resize(n);
    for (int i = 0; i < n; ++i)
      for (const auto& [x, j] : ball.neighbors(i)) {
        (void)x;
        adj[i].push_back(j);
      }
    for (int f : fix) {
      if (f < 0 || f >= n) throw DomainError("fixed vertex index out of range");
      fix_dist.push_back(bfs_from(f));
    }
    // Assign vertices ordered by (distance from center, degree, index); start
    // from the fixed ones so their constraints bite immediately.
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<bool> fixed(n, false);
    for (int f : fix) fixed[f] = true;
    std::sort(order.begin(), order.end(), [&](int a, int c) -> bool {
      if (fixed[a] != fixed[c]) return fixed[a];
      if (ball.distance(a) != ball.distance(c)) return ball.distance(a) < ball.distance(c);
      if (adj[a].size() != adj[c].size()) return adj[a].size() < adj[c].size();
      return a < c;
    });
    pos_in_order.assign(n, 0);
    for (int k = 0; k < n; ++k) pos_in_order[order[k]] = k;
    img.assign(n, -1);
    pre.assign(n, -1);
    for (int f : fix) {
      img[f] = f;
      pre[f] = f;
    }
    // Fixed vertices may repeat in `order`'s head; dedupe is unnecessary since
    // run() skips already-assigned vertices.
    twin_class.assign(n, -1);
    if (mod_twins) {
      twin_rule = true;
      // Outer-sphere vertices with identical neighbor sets are interchangeable
      // by a permutation fixing everything else; group them.
      std::map<std::vector<int>, std::vector<int>> by_nbrs;
      for (int i = 0; i < n; ++i) {
        if (ball.distance(i) != ball.radius() || fixed[i]) continue;
        std::vector<int> key = adj[i];
        std::sort(key.begin(), key.end());
        by_nbrs[key].push_back(i);
      }
      for (auto& [key, members] : by_nbrs) {
        (void)key;
        if (members.size() < 2) continue;
        for (int v : members) twin_class[v] = static_cast<int>(twin_members.size());
        twin_members.push_back(std::move(members));
      }
    }
  }

  std::vector<int> bfs_from(int start) const {
    std::vector<int> dist(ball.size(), -1);
    std::vector<int> queue{start};
    dist[start] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int v : adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    return dist;
  }

  bool candidate_ok(int v, int c) const {
    if (adj[v].size() != adj[c].size()) return false;
    for (const auto& d : fix_dist)
      if (d[v] != d[c]) return false;
    // adjacency must match against every already-assigned vertex, both ways
    for (int u : adj[v])
      if (img[u] >= 0 && !has_edge(c, img[u])) return false;
    for (int u : adj[c])
      if (pre[u] >= 0 && !has_edge(v, pre[u])) return false;
    // count catch: non-neighbors with assigned images adjacent to c
    int assigned_nbrs_v = 0, assigned_pre_c = 0;
    for (int u : adj[v])
      if (img[u] >= 0) ++assigned_nbrs_v;
    for (int u : adj[c])
      if (pre[u] >= 0) ++assigned_pre_c;
    return assigned_nbrs_v == assigned_pre_c;
  }

  bool has_edge(int a, int b) const {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  }

  // Under the twin rule an image inside a twin class is allowed only when it
  // is the least member of its class still unused.
  bool least_unused_twin(int c) const {
    for (int m : twin_members[twin_class[c]]) {
      if (m == c) return true;
      if (pre[m] < 0) return false;
    }
    return true;
  }

  void run(std::size_t k) {
    if (k == order.size()) {
      solutions.push_back(img);
      return;
    }
    int v = order[k];
    if (img[v] >= 0) {
      run(k + 1);
      return;
    }
    for (int c = 0; c < static_cast<int>(ball.size()); ++c) {
      if (pre[c] >= 0) continue;
      if (++nodes > budget)
        throw LimitError("oracle search exceeds cap of " + std::to_string(budget) + " nodes");
      if (twin_rule && twin_class[c] >= 0 && !least_unused_twin(c)) continue;
      if (!candidate_ok(v, c)) continue;
      img[v] = c;
      pre[c] = v;
      run(k + 1);
      img[v] = -1;
      pre[c] = -1;
    }
  }
};

}  // namespace detail

// Every adjacency-preserving bijection of the ball onto itself fixing the
// given vertices pointwise, by exhaustive backtracking. Sorted by image array.
inline std::vector<BallAutomorphism> enumerate_ball_autos(
    std::shared_ptr<const CayleyBall> ball, const std::vector<int>& fix,
    const Limits& lim = {}) {
  detail::OracleSearch search(*ball, fix, lim.max_nodes);
  search.run(0);
  std::sort(search.solutions.begin(), search.solutions.end());
  std::vector<BallAutomorphism> out;
  out.reserve(search.solutions.size());
  for (std::vector<int>& sol : search.solutions)
    out.emplace_back(ball, ball, std::move(sol));
  return out;
}

// Enumeration factored through boundary twins. Outer-sphere vertices with
// identical neighbor sets can be permuted freely without touching anything
// else, so the group splits exactly: every automorphism is (twin permutation)
// composed with a unique representative whose twin images are always the
// least ones still free. Total count = representatives.size() * twin_perms.
struct TwinFactoredAutos {
  std::vector<BallAutomorphism> representatives;
  std::vector<std::vector<int>> twin_classes;  // the nontrivial classes only
  std::uint64_t twin_perms = 1;                // product of class factorials
};

inline TwinFactoredAutos enumerate_ball_autos_mod_twins(
    std::shared_ptr<const CayleyBall> ball, const std::vector<int>& fix,
    const Limits& lim = {}) {
  detail::OracleSearch search(*ball, fix, lim.max_nodes, true);
  search.run(0);
  std::sort(search.solutions.begin(), search.solutions.end());
  TwinFactoredAutos out;
  out.twin_classes = std::move(search.twin_members);
  for (const std::vector<int>& cls : out.twin_classes)
    for (std::uint64_t m = 2; m <= cls.size(); ++m) {
      if (out.twin_perms > std::numeric_limits<std::uint64_t>::max() / m)
        throw LimitError("twin permutation count overflows");
      out.twin_perms *= m;
    }
  out.representatives.reserve(search.solutions.size());
  for (std::vector<int>& sol : search.solutions)
    out.representatives.emplace_back(ball, ball, std::move(sol));
  return out;
}

// Restrictions to B(center, n) of all automorphisms of B(center, outer) that
// fix the center (or none, when fix_center is false), deduplicated and sorted.
// outer = n + 1 is the contract; larger values give finer approximations.
inline std::vector<BallAutomorphism> stable_restrictions_outer(
    const DefiningGraph& g, int n, int outer, bool fix_center, const Limits& lim = {}) {
  if (outer < n) throw DomainError("outer radius must be at least the inner radius");
  std::shared_ptr<const CayleyBall> big = build_ball(g, outer, {}, lim);
  std::shared_ptr<const CayleyBall> small = build_ball(g, n, {}, lim);
  std::vector<int> fix;
  if (fix_center) fix.push_back(0);
  std::map<std::string, BallAutomorphism> dedup;
  for (const BallAutomorphism& a : enumerate_ball_autos(big, fix, lim)) {
    BallAutomorphism r = restrict_onto(a, small, small);
    dedup.emplace(r.key(), std::move(r));
  }
  std::vector<BallAutomorphism> out;
  out.reserve(dedup.size());
  for (auto& [k, v] : dedup) {
    (void)k;
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<BallAutomorphism> stable_restrictions(const DefiningGraph& g, int n,
                                                         bool fix_center,
                                                         const Limits& lim = {}) {
  return stable_restrictions_outer(g, n, n + 1, fix_center, lim);
}

// Checks constructed maps against the oracle enumeration of the same ball:
// a constructed map validates when some enumerated automorphism agrees with it
// on its whole declared domain.
struct CrossValidationReport {
  std::size_t constructed_count = 0;
  std::size_t oracle_count = 0;
  std::size_t matched = 0;
  std::vector<std::string> unmatched;  // keys of constructed maps with no oracle match
  bool all_matched() const { return unmatched.empty(); }
};

inline CrossValidationReport cross_validate(std::shared_ptr<const CayleyBall> ball,
                                            const std::vector<BallAutomorphism>& constructed,
                                            const std::vector<int>& fix,
                                            const Limits& lim = {}) {
  std::vector<BallAutomorphism> oracle = enumerate_ball_autos(ball, fix, lim);
  CrossValidationReport report;
  report.constructed_count = constructed.size();
  report.oracle_count = oracle.size();
  for (const BallAutomorphism& c : constructed) {
    // Align by words: keep the pairs living entirely inside the oracle ball.
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < c.raw_map().size(); ++i) {
      if (c.raw_map()[i] < 0) continue;
      auto si = ball->index_of(c.source().vertex(static_cast<int>(i)));
      auto ti = ball->index_of(c.target().vertex(c.raw_map()[i]));
      if (si && ti) pairs.emplace_back(*si, *ti);
    }
    bool found = false;
    for (const BallAutomorphism& o : oracle) {
      bool agrees = true;
      for (const auto& [si, ti] : pairs)
        if (o.raw_map()[si] != ti) {
          agrees = false;
          break;
        }
      if (agrees) {
        found = true;
        break;
      }
    }
    if (found)
      ++report.matched;
    else
      report.unmatched.push_back(c.key());
  }
  return report;
}

}  // namespace coxcay
