#pragma once

#include <optional>
#include <vector>

#include "coxcay/autgamma.hpp"
#include "coxcay/defgraph.hpp"

namespace coxcay {

// A vertex x together with a nontrivial symmetry fixing star(x) pointwise.
struct Witness {
  VertexId vertex;
  GraphAutomorphism alpha;  // on the whole graph
};

// Separating set S, the side Γ₁ = S plus a union of components, and a
// nontrivial symmetry of the side fixing S pointwise (indexed in side order).
struct GoodSeparatingSet {
  VertexSet s;
  VertexSet side;
  GraphAutomorphism alpha;  // on induced_subgraph(side)
};

struct Verdict {
  bool discrete;
  std::optional<Witness> witness;
  std::optional<GoodSeparatingSet> good_sep;
  std::size_t aut_order;
};

// Least vertex x (declaration order) whose star has a nontrivial pointwise
// stabilizer, with the least such nontrivial symmetry.
inline std::optional<Witness> star_fixing_witness(const DefiningGraph& g) {
  for (VertexId x = 0; x < static_cast<VertexId>(g.size()); ++x) {
    std::vector<GraphAutomorphism> stab = pointwise_stabilizer(g, g.star(x));
    if (stab.size() > 1) return Witness{x, stab[1]};  // stab[0] is the identity
  }
  return std::nullopt;
}

// Checks every clause of the definition: S separates, side = S plus a union of
// components (at least one component on each side), and alpha is a nontrivial
// weight-preserving symmetry of the side fixing S pointwise. Also checks that
// extending alpha by the identity stays weight-preserving on the whole graph.
inline bool verify_good_sep(const DefiningGraph& g, const VertexSet& s,
                            const VertexSet& side, const GraphAutomorphism& alpha) {
  for (VertexId v : s)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) return false;
  for (VertexId v : side)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) return false;
  for (VertexId v : s)
    if (!side.contains(v)) return false;
  if (s.size() == g.size()) return false;

  std::vector<VertexSet> parts = g.connected_components(s);
  if (parts.size() < 2) return false;

  // side minus S must be a union of components, nonempty and proper.
  std::size_t inside = 0;
  for (const VertexSet& part : parts) {
    bool all_in = true, all_out = true;
    for (VertexId v : part) {
      if (side.contains(v))
        all_out = false;
      else
        all_in = false;
    }
    if (!all_in && !all_out) return false;
    if (all_in) ++inside;
  }
  if (inside == 0 || inside == parts.size()) return false;

  DefiningGraph sub = g.induced_subgraph(side);
  if (alpha.size() != side.size()) return false;
  if (!is_weight_preserving(sub, alpha)) return false;
  if (alpha.is_identity()) return false;
  for (std::size_t i = 0; i < side.size(); ++i)
    if (s.contains(side.ids()[i]) && alpha(static_cast<VertexId>(i)) != static_cast<VertexId>(i))
      return false;
  try {
    extend_by_identity(g, side, alpha);
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

// From a star-fixing witness (x, α): S = link(x), side = everything except x,
// α restricted to the side. The vertex x forms its own component of Γ∖S, so S
// separates and the side is S plus all other components.
inline std::optional<GoodSeparatingSet> find_good_separating_set(const DefiningGraph& g) {
  std::optional<Witness> w = star_fixing_witness(g);
  if (!w) return std::nullopt;
  VertexSet s = g.link(w->vertex);
  std::vector<VertexId> side_ids;
  for (VertexId v = 0; v < static_cast<VertexId>(g.size()); ++v)
    if (v != w->vertex) side_ids.push_back(v);
  VertexSet side(std::move(side_ids));
  std::vector<VertexId> img;
  img.reserve(side.size());
  for (std::size_t i = 0; i < side.size(); ++i) {
    VertexId image = w->alpha(side.ids()[i]);
    // alpha fixes star(x) ∋ x, so it permutes the side
    auto pos = std::lower_bound(side.ids().begin(), side.ids().end(), image);
    img.push_back(static_cast<VertexId>(pos - side.ids().begin()));
  }
  return GoodSeparatingSet{std::move(s), std::move(side), GraphAutomorphism(std::move(img))};
}

inline Verdict classify(const DefiningGraph& g) {
  Verdict v{true, star_fixing_witness(g), find_good_separating_set(g),
            enumerate_aut(g).size()};
  v.discrete = !v.witness.has_value();
  return v;
}

}  // namespace coxcay
