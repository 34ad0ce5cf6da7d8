#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxcay/autgamma.hpp"
#include "coxcay/cayley.hpp"
#include "coxcay/classifier.hpp"

namespace coxcay {

namespace detail {

inline bool same_ball(const std::shared_ptr<const CayleyBall>& a,
                      const std::shared_ptr<const CayleyBall>& b) {
  if (a.get() == b.get()) return true;
  return a->graph() == b->graph() && a->center() == b->center() &&
         a->radius() == b->radius();
}

inline bool balls_adjacent(const CayleyBall& ball, int i, int j) {
  for (VertexId x = 0; x < static_cast<VertexId>(ball.graph().size()); ++x)
    if (ball.neighbor(i, x) == j) return true;
  return false;
}

}  // namespace detail

// Partial edge-preserving injection between two Cayley balls. Entries of -1
// mark vertices outside the declared domain. Labels need not be preserved.
class BallAutomorphism {
 public:
  BallAutomorphism(std::shared_ptr<const CayleyBall> source,
                   std::shared_ptr<const CayleyBall> target, std::vector<int> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!source_ || !target_) throw DomainError("ball automorphism needs both balls");
    if (map_.size() != source_->size())
      throw DomainError("map size does not match the source ball");
    std::vector<bool> hit(target_->size(), false);
    for (int t : map_) {
      if (t == -1) continue;
      if (t < 0 || static_cast<std::size_t>(t) >= target_->size())
        throw DomainError("map image out of range");
      if (hit[t]) throw DomainError("map is not injective");
      hit[t] = true;
    }
    for (const auto& [i, j, x] : source_->edges()) {
      (void)x;
      if (map_[i] < 0 || map_[j] < 0) continue;
      if (!detail::balls_adjacent(*target_, map_[i], map_[j]))
        throw DomainError("image edge missing");
    }
    // A map between concentric balls fixing the center preserves spheres.
    if (detail::same_ball(source_, target_) && !map_.empty() && map_[0] == 0)
      for (std::size_t i = 0; i < map_.size(); ++i)
        if (map_[i] >= 0 && source_->distance(static_cast<int>(i)) != target_->distance(map_[i]))
          throw DomainError("map breaks sphere preservation");
  }

  const CayleyBall& source() const { return *source_; }
  const CayleyBall& target() const { return *target_; }
  std::shared_ptr<const CayleyBall> source_ptr() const { return source_; }
  std::shared_ptr<const CayleyBall> target_ptr() const { return target_; }
  bool defined(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= map_.size())
      throw DomainError("ball vertex index out of range");
    return map_[i] >= 0;
  }
  int image(int i) const {
    if (!defined(i)) throw DomainError("vertex outside the declared domain");
    return map_[i];
  }
  const std::vector<int>& raw_map() const { return map_; }
  std::size_t domain_size() const {
    std::size_t n = 0;
    for (int t : map_)
      if (t >= 0) ++n;
    return n;
  }
  bool total() const { return domain_size() == map_.size(); }

  BallAutomorphism inverse() const {
    std::vector<int> inv(target_->size(), -1);
    for (std::size_t i = 0; i < map_.size(); ++i)
      if (map_[i] >= 0) inv[map_[i]] = static_cast<int>(i);
    return BallAutomorphism(target_, source_, std::move(inv));
  }

  // Word-level fingerprint; equal exactly for maps with identical graph data.
  std::string key() const {
    std::string out;
    for (std::size_t i = 0; i < map_.size(); ++i) {
      if (map_[i] < 0) continue;
      out += format_word(source_->graph(), source_->vertex(static_cast<int>(i)));
      out += '>';
      out += format_word(target_->graph(), target_->vertex(map_[i]));
      out += ';';
    }
    return out;
  }

  friend bool operator==(const BallAutomorphism& a, const BallAutomorphism& b) {
    return detail::same_ball(a.source_, b.source_) &&
           detail::same_ball(a.target_, b.target_) && a.map_ == b.map_;
  }

 private:
  std::shared_ptr<const CayleyBall> source_, target_;
  std::vector<int> map_;
};

inline BallAutomorphism identity_auto(std::shared_ptr<const CayleyBall> ball) {
  std::vector<int> map(ball->size());
  std::iota(map.begin(), map.end(), 0);
  auto tgt = ball;
  return BallAutomorphism(std::move(ball), std::move(tgt), std::move(map));
}

// (outer ∘ inner): defined where inner is defined and its image lies in the
// domain of outer. inner's target and outer's source must be the same ball.
inline BallAutomorphism compose(const BallAutomorphism& outer, const BallAutomorphism& inner) {
  if (!detail::same_ball(inner.target_ptr(), outer.source_ptr()))
    throw DomainError("composition requires matching middle balls");
  std::vector<int> map(inner.source().size(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) {
    int mid = inner.raw_map()[i];
    if (mid >= 0 && outer.defined(mid)) map[i] = outer.image(mid);
  }
  return BallAutomorphism(inner.source_ptr(), outer.target_ptr(), std::move(map));
}

// Restriction onto smaller balls: a vertex of sub_source is in the domain when
// it exists in the original source, has an image there, and that image lies in
// sub_target.
inline BallAutomorphism restrict_onto(const BallAutomorphism& a,
                                      std::shared_ptr<const CayleyBall> sub_source,
                                      std::shared_ptr<const CayleyBall> sub_target) {
  std::vector<int> map(sub_source->size(), -1);
  for (std::size_t i = 0; i < sub_source->size(); ++i) {
    auto src_idx = a.source().index_of(sub_source->vertex(static_cast<int>(i)));
    if (!src_idx || !a.defined(*src_idx)) continue;
    auto tgt_idx = sub_target->index_of(a.target().vertex(a.image(*src_idx)));
    if (tgt_idx) map[i] = *tgt_idx;
  }
  return BallAutomorphism(std::move(sub_source), std::move(sub_target), std::move(map));
}

// Label bijection induced by α at v: x maps to the label of the target edge
// from α(v) to α(v·x). Needs all of B(v,1) inside the ball and the domain.
inline GraphAutomorphism extract_local_action(const BallAutomorphism& a, int v) {
  const CayleyBall& src = a.source();
  const CayleyBall& tgt = a.target();
  const DefiningGraph& g = src.graph();
  if (!a.defined(v)) throw DomainError("vertex outside the declared domain");
  const int tv = a.image(v);
  std::vector<VertexId> img(g.size(), -1);
  for (VertexId x = 0; x < static_cast<VertexId>(g.size()); ++x) {
    int j = src.neighbor(v, x);
    if (j < 0 || !a.defined(j))
      throw DomainError("insufficient domain around the vertex");
    int tj = a.image(j);
    VertexId label = -1;
    for (VertexId y = 0; y < static_cast<VertexId>(g.size()); ++y)
      if (tgt.neighbor(tv, y) == tj) {
        label = y;
        break;
      }
    if (label < 0) throw DomainError("image edge missing");
    img[x] = label;
  }
  GraphAutomorphism sigma{std::move(img)};
  if (!is_weight_preserving(g, sigma))
    throw DomainError("extracted local action is not weight-preserving");
  return sigma;
}

enum class ConfigKind { kConstant, kCoset, kExplicit };

// Assignment of one graph symmetry per ball vertex.
class Configuration {
 public:
  static Configuration explicit_table(std::shared_ptr<const CayleyBall> ball,
                                      std::vector<GraphAutomorphism> table) {
    return Configuration(std::move(ball), std::move(table), ConfigKind::kExplicit);
  }
  const CayleyBall& ball() const { return *ball_; }
  std::shared_ptr<const CayleyBall> ball_ptr() const { return ball_; }
  ConfigKind kind() const { return kind_; }
  const GraphAutomorphism& at(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= table_.size())
      throw DomainError("ball vertex index out of range");
    return table_[i];
  }

 private:
  friend Configuration make_constant_config(std::shared_ptr<const CayleyBall>,
                                            const GraphAutomorphism&);
  friend Configuration make_coset_config(std::shared_ptr<const CayleyBall>,
                                         const VertexSet&, const GraphAutomorphism&,
                                         const std::vector<NormalForm>&, const Limits&);
  Configuration(std::shared_ptr<const CayleyBall> ball,
                std::vector<GraphAutomorphism> table, ConfigKind kind)
      : ball_(std::move(ball)), table_(std::move(table)), kind_(kind) {
    if (!ball_) throw DomainError("configuration needs a ball");
    if (table_.size() != ball_->size())
      throw DomainError("configuration table size does not match the ball");
    for (const GraphAutomorphism& s : table_)
      if (s.size() != ball_->graph().size() || !is_weight_preserving(ball_->graph(), s))
        throw DomainError("configuration value is not a graph symmetry");
  }

  std::shared_ptr<const CayleyBall> ball_;
  std::vector<GraphAutomorphism> table_;
  ConfigKind kind_;
};

inline Configuration make_constant_config(std::shared_ptr<const CayleyBall> ball,
                                          const GraphAutomorphism& sigma) {
  std::vector<GraphAutomorphism> table(ball->size(), sigma);
  return Configuration(std::move(ball), std::move(table), ConfigKind::kConstant);
}

// Coset-driven configuration: the extended symmetry ν′ on every vertex whose
// left coset of the side subgroup has its key in chi, identity elsewhere.
inline Configuration make_coset_config(std::shared_ptr<const CayleyBall> ball,
                                       const VertexSet& side, const GraphAutomorphism& nu,
                                       const std::vector<NormalForm>& chi,
                                       const Limits& lim = {}) {
  const DefiningGraph& g = ball->graph();
  // Boundary of the side: these vertices see the rest of the graph, so any
  // usable symmetry must fix them.
  std::vector<VertexId> boundary;
  for (VertexId v : side)
    for (VertexId u = 0; u < static_cast<VertexId>(g.size()); ++u)
      if (!side.contains(u) && g.adjacent(u, v)) {
        boundary.push_back(v);
        break;
      }
  VertexSet s(std::move(boundary));
  if (!verify_good_sep(g, s, side, nu))
    throw DomainError("side and symmetry do not form a good separating set");
  GraphAutomorphism nu_prime = extend_by_identity(g, side, nu);

  std::set<NormalForm> keys;
  for (const NormalForm& k : chi) {
    if (coset_key(g, k, side, lim) != k)
      throw DomainError("'" + format_word(g, k) + "' is not a coset key");
    keys.insert(k);
  }
  std::vector<GraphAutomorphism> table;
  table.reserve(ball->size());
  const GraphAutomorphism id = GraphAutomorphism::identity(g.size());
  for (std::size_t i = 0; i < ball->size(); ++i) {
    NormalForm key = coset_key(g, ball->vertex(static_cast<int>(i)), side, lim);
    table.push_back(keys.count(key) ? nu_prime : id);
  }
  return Configuration(std::move(ball), std::move(table), ConfigKind::kCoset);
}

// The compatibility condition on configurations: across every ball edge
// {v, vx}, the two symmetries agree on star(x).
inline bool check_star_condition(const Configuration& cfg) {
  const CayleyBall& ball = cfg.ball();
  for (const auto& [i, j, x] : ball.edges())
    for (VertexId s : ball.graph().star(x))
      if (cfg.at(i)(s) != cfg.at(j)(s)) return false;
  return true;
}

// Build the ball automorphism realizing a configuration: the center is fixed
// and each vertex image follows from any neighbor one sphere closer. All such
// neighbors must agree, each sphere must map into itself, edges must map to
// edges, and the local actions of the result must reproduce the configuration.
inline BallAutomorphism synthesize(const Configuration& cfg, const Limits& lim = {}) {
  std::shared_ptr<const CayleyBall> ball = cfg.ball_ptr();
  const DefiningGraph& g = ball->graph();
  if (!check_star_condition(cfg))
    throw SynthesisError("configuration violates the star condition");

  std::vector<int> map(ball->size(), -1);
  map[0] = 0;
  for (int i = 1; i < static_cast<int>(ball->size()); ++i) {
    const int d = ball->distance(i);
    bool have = false;
    NormalForm image;
    for (VertexId x = 0; x < static_cast<VertexId>(g.size()); ++x) {
      int j = ball->neighbor(i, x);
      if (j < 0 || ball->distance(j) != d - 1) continue;
      NormalForm candidate =
          multiply(g, ball->vertex(map[j]), cfg.at(j)(x), lim);
      if (!have) {
        image = candidate;
        have = true;
      } else if (candidate != image) {
        throw SynthesisError("images disagree across descent edges");
      }
    }
    if (!have) throw SynthesisError("vertex has no neighbor one sphere closer");
    auto idx = ball->index_of(image);
    if (!idx) throw SynthesisError("image leaves the ball");
    if (ball->distance(*idx) != d)
      throw SynthesisError("image breaks sphere preservation");
    map[i] = *idx;
  }

  std::vector<int> check = map;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != static_cast<int>(i))
      throw SynthesisError("synthesized map is not a bijection");
  for (const auto& [i, j, x] : ball->edges()) {
    (void)x;
    if (!detail::balls_adjacent(*ball, map[i], map[j]))
      throw SynthesisError("image edge missing");
  }

  BallAutomorphism result(ball, ball, std::move(map));
  for (int i = 0; i < static_cast<int>(ball->size()); ++i) {
    if (!ball->interior(i)) continue;
    if (extract_local_action(result, i) != cfg.at(i))
      throw SynthesisError("local action mismatch at an interior vertex");
  }
  return result;
}

// Left multiplication by w, onto the ball of the same radius around w·center.
// Preserves every edge label.
inline BallAutomorphism translation(std::shared_ptr<const CayleyBall> ball,
                                    const NormalForm& w, const Limits& lim = {}) {
  const DefiningGraph& g = ball->graph();
  NormalForm tc = multiply(g, w, ball->center(), lim);
  std::shared_ptr<const CayleyBall> target = build_ball(g, ball->radius(), tc, lim);
  std::vector<int> map(ball->size(), -1);
  for (std::size_t i = 0; i < ball->size(); ++i) {
    NormalForm image = multiply(g, w, ball->vertex(static_cast<int>(i)), lim);
    auto idx = target->index_of(image);
    if (!idx) throw DomainError("translation image left the target ball");
    map[i] = *idx;
  }
  return BallAutomorphism(std::move(ball), std::move(target), std::move(map));
}

namespace detail {

// σ applied letterwise to an element. Independent of the chosen reduced word:
// each braid orbit member must give the same result, which is asserted.
inline NormalForm apply_letterwise(const DefiningGraph& g, const GraphAutomorphism& sigma,
                                   const NormalForm& v, const Limits& lim) {
  bool have = false;
  NormalForm out;
  for (const Word& u : braid_orbit(g, v.word(), lim)) {
    NormalForm candidate = canonical(g, apply_word(sigma, u), lim);
    if (!have) {
      out = candidate;
      have = true;
    } else if (candidate != out) {
      throw DomainError("letterwise application depends on the reduced word");
    }
  }
  return out;
}

}  // namespace detail

// The pair (w, σ) acting as v ↦ w·σ(v), with σ applied letterwise. The local
// action of the result is σ at every vertex.
inline BallAutomorphism almost_translation(std::shared_ptr<const CayleyBall> ball,
                                           const NormalForm& w, const GraphAutomorphism& sigma,
                                           const Limits& lim = {}) {
  const DefiningGraph& g = ball->graph();
  if (sigma.size() != g.size() || !is_weight_preserving(g, sigma))
    throw DomainError("almost translation needs a graph symmetry");
  NormalForm tc = multiply(g, w, detail::apply_letterwise(g, sigma, ball->center(), lim), lim);
  std::shared_ptr<const CayleyBall> target = build_ball(g, ball->radius(), tc, lim);
  std::vector<int> map(ball->size(), -1);
  for (std::size_t i = 0; i < ball->size(); ++i) {
    NormalForm image =
        multiply(g, w, detail::apply_letterwise(g, sigma, ball->vertex(static_cast<int>(i)), lim), lim);
    auto idx = target->index_of(image);
    if (!idx) throw DomainError("almost translation image left the target ball");
    map[i] = *idx;
  }
  return BallAutomorphism(std::move(ball), std::move(target), std::move(map));
}

// Vertices reachable from v along edges whose labels are fixed by σ.
inline std::vector<int> fixed_point_component(const CayleyBall& ball, int v,
                                              const GraphAutomorphism& sigma) {
  if (sigma.size() != ball.graph().size())
    throw DomainError("symmetry size does not match the graph");
  std::vector<bool> seen(ball.size(), false);
  std::vector<int> queue{v}, out;
  seen[static_cast<std::size_t>(v)] = true;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    out.push_back(u);
    for (VertexId x = 0; x < static_cast<VertexId>(ball.graph().size()); ++x) {
      if (sigma(x) != x) continue;
      int j = ball.neighbor(u, x);
      if (j >= 0 && !seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxcay
