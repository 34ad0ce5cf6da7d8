#pragma once

#include <memory>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxcay/defgraph.hpp"
#include "coxcay/words.hpp"

namespace coxcay {

// Finite radius-n ball of the labelled Cayley graph around a center element.
// Vertices are normal forms, listed sphere by sphere and shortlex within each
// sphere; adjacency is precomputed per generator label.
class CayleyBall {
 public:
  const DefiningGraph& graph() const { return graph_; }
  const NormalForm& center() const { return center_; }
  int radius() const { return radius_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<NormalForm>& vertices() const { return vertices_; }
  const NormalForm& vertex(int i) const {
    check_index(i);
    return vertices_[i];
  }
  int distance(int i) const {
    check_index(i);
    return distance_[i];
  }
  bool interior(int i) const { return distance(i) < radius_; }
  std::optional<int> index_of(const NormalForm& nf) const {
    auto it = index_.find(nf.word());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  // Neighbor of vertex i along label x, or -1 when v·x falls outside the ball.
  int neighbor(int i, VertexId x) const {
    check_index(i);
    if (x < 0 || static_cast<std::size_t>(x) >= graph_.size())
      throw DomainError("vertex index out of range");
    return adj_[static_cast<std::size_t>(i) * graph_.size() + x];
  }
  // In-ball neighbors of i as (label, index), sorted by label.
  std::vector<std::pair<VertexId, int>> neighbors(int i) const {
    std::vector<std::pair<VertexId, int>> out;
    for (VertexId x = 0; x < static_cast<VertexId>(graph_.size()); ++x)
      if (int j = neighbor(i, x); j >= 0) out.emplace_back(x, j);
    return out;
  }
  // Undirected edge list (i, j, label) with i < j, sorted.
  std::vector<std::tuple<int, int, VertexId>> edges() const {
    std::vector<std::tuple<int, int, VertexId>> out;
    for (int i = 0; i < static_cast<int>(size()); ++i)
      for (VertexId x = 0; x < static_cast<VertexId>(graph_.size()); ++x) {
        int j = neighbor(i, x);
        if (j > i) out.emplace_back(i, j, x);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  friend std::shared_ptr<const CayleyBall> build_ball(const DefiningGraph&, int,
                                                      const NormalForm&, const Limits&);
  CayleyBall(DefiningGraph g, NormalForm center, int radius)
      : graph_(std::move(g)), center_(std::move(center)), radius_(radius) {}
  void check_index(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= vertices_.size())
      throw DomainError("ball vertex index out of range");
  }

  DefiningGraph graph_;
  NormalForm center_;
  int radius_;
  std::vector<NormalForm> vertices_;
  std::vector<int> distance_;
  std::vector<int> adj_;  // size * |V| matrix, -1 = outside the ball
  std::unordered_map<Word, int, WordHash> index_;
};

inline std::shared_ptr<const CayleyBall> build_ball(const DefiningGraph& g, int radius,
                                                    const NormalForm& center = {},
                                                    const Limits& lim = {}) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  auto ball = std::shared_ptr<CayleyBall>(new CayleyBall(g, center, radius));

  std::vector<NormalForm> frontier{center};
  ball->vertices_.push_back(center);
  ball->distance_.push_back(0);
  ball->index_[center.word()] = 0;
  for (int d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<NormalForm> next;
    for (const NormalForm& v : frontier)
      for (VertexId x = 0; x < static_cast<VertexId>(g.size()); ++x) {
        NormalForm u = multiply(g, v, x, lim);
        if (!ball->index_.count(u.word())) {
          ball->index_[u.word()] = -1;  // claimed, index assigned after sorting
          next.push_back(std::move(u));
        }
      }
    std::sort(next.begin(), next.end());  // shortlex within the new sphere
    for (NormalForm& u : next) {
      if (ball->vertices_.size() >= lim.max_ball)
        throw LimitError("ball exceeds cap of " + std::to_string(lim.max_ball) + " vertices");
      ball->index_[u.word()] = static_cast<int>(ball->vertices_.size());
      ball->vertices_.push_back(u);
      ball->distance_.push_back(d);
    }
    frontier = std::move(next);
  }

  const std::size_t n = g.size();
  ball->adj_.assign(ball->vertices_.size() * n, -1);
  for (std::size_t i = 0; i < ball->vertices_.size(); ++i)
    for (VertexId x = 0; x < static_cast<VertexId>(n); ++x) {
      NormalForm u = multiply(g, ball->vertices_[i], x, lim);
      auto it = ball->index_.find(u.word());
      if (it != ball->index_.end()) ball->adj_[i * n + x] = it->second;
    }
  return ball;
}

// The 2·m(x,y) vertices v, vx, vxy, ... of the relation cycle through v, when
// the whole cycle lies inside the ball.
inline std::optional<std::vector<int>> relation_cycle(const CayleyBall& ball, int v,
                                                      VertexId x, VertexId y) {
  const DefiningGraph& g = ball.graph();
  Weight wt = g.weight(x, y);
  if (x == y || !wt.is_finite())
    throw DomainError("relation cycle requires an edge between two distinct vertices");
  const std::uint32_t m = wt.value();
  std::vector<int> cycle;
  int cur = v;
  for (std::uint32_t step = 0; step < 2 * m; ++step) {
    cycle.push_back(cur);
    VertexId label = (step % 2 == 0) ? x : y;
    cur = ball.neighbor(cur, label);
    if (cur < 0) return std::nullopt;
  }
  if (cur != v) throw DomainError("relation cycle failed to close");
  return cycle;
}

}  // namespace coxcay
