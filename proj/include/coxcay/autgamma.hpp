#pragma once

#include <algorithm>
#include <vector>

#include "coxcay/defgraph.hpp"
#include "coxcay/words.hpp"

namespace coxcay {

// Permutation of the vertices of a defining graph, stored as an image array.
class GraphAutomorphism {
 public:
  explicit GraphAutomorphism(std::vector<VertexId> images) : img_(std::move(images)) {
    std::vector<bool> hit(img_.size(), false);
    for (VertexId v : img_) {
      if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || hit[v])
        throw DomainError("image array is not a permutation");
      hit[v] = true;
    }
  }
  static GraphAutomorphism identity(std::size_t n) {
    std::vector<VertexId> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<VertexId>(i);
    return GraphAutomorphism(std::move(img));
  }
  std::size_t size() const { return img_.size(); }
  VertexId operator()(VertexId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= img_.size())
      throw DomainError("vertex index out of range");
    return img_[v];
  }
  const std::vector<VertexId>& images() const { return img_; }
  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<VertexId>(i)) return false;
    return true;
  }
  // (this ∘ other)(v) = this(other(v))
  GraphAutomorphism compose(const GraphAutomorphism& other) const {
    if (other.size() != size()) throw DomainError("size mismatch in composition");
    std::vector<VertexId> img(size());
    for (std::size_t i = 0; i < size(); ++i) img[i] = img_[other.img_[i]];
    return GraphAutomorphism(std::move(img));
  }
  GraphAutomorphism inverse() const {
    std::vector<VertexId> img(size());
    for (std::size_t i = 0; i < size(); ++i) img[img_[i]] = static_cast<VertexId>(i);
    return GraphAutomorphism(std::move(img));
  }
  friend bool operator==(const GraphAutomorphism& a, const GraphAutomorphism& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const GraphAutomorphism& a, const GraphAutomorphism& b) {
    return !(a == b);
  }
  friend bool operator<(const GraphAutomorphism& a, const GraphAutomorphism& b) {
    return a.img_ < b.img_;
  }

 private:
  std::vector<VertexId> img_;
};

inline bool is_weight_preserving(const DefiningGraph& g, const GraphAutomorphism& p) {
  if (p.size() != g.size()) return false;
  for (VertexId u = 0; u < static_cast<VertexId>(g.size()); ++u)
    for (VertexId v = u + 1; v < static_cast<VertexId>(g.size()); ++v)
      if (g.weight(u, v) != g.weight(p(u), p(v))) return false;
  return true;
}

namespace detail {

// Sorted multiset of weights from v to every other vertex; invariant under
// weight-preserving permutations.
inline std::vector<Weight> weight_signature(const DefiningGraph& g, VertexId v) {
  std::vector<Weight> sig;
  for (VertexId u = 0; u < static_cast<VertexId>(g.size()); ++u)
    if (u != v) sig.push_back(g.weight(v, u));
  std::sort(sig.begin(), sig.end());
  return sig;
}

inline void enumerate_aut_rec(const DefiningGraph& g,
                              const std::vector<std::vector<Weight>>& sig,
                              std::vector<VertexId>& img, std::vector<bool>& used,
                              std::size_t k, std::vector<GraphAutomorphism>& out) {
  const std::size_t n = g.size();
  if (k == n) {
    out.emplace_back(img);
    return;
  }
  for (VertexId c = 0; c < static_cast<VertexId>(n); ++c) {
    if (used[c] || sig[k] != sig[c]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j)
      ok = g.weight(static_cast<VertexId>(k), static_cast<VertexId>(j)) == g.weight(c, img[j]);
    if (!ok) continue;
    img[k] = c;
    used[c] = true;
    enumerate_aut_rec(g, sig, img, used, k + 1, out);
    used[c] = false;
  }
}

}  // namespace detail

// All weight-preserving permutations, in lexicographic order of their image
// arrays. The identity is lex-least among permutations, so it comes first.
inline std::vector<GraphAutomorphism> enumerate_aut(const DefiningGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Weight>> sig;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
    sig.push_back(detail::weight_signature(g, v));
  std::vector<VertexId> img(n, 0);
  std::vector<bool> used(n, false);
  std::vector<GraphAutomorphism> out;
  detail::enumerate_aut_rec(g, sig, img, used, 0, out);
  return out;
}

// Members of Aut(Γ) fixing every vertex of fix, same order as enumerate_aut.
inline std::vector<GraphAutomorphism> pointwise_stabilizer(const DefiningGraph& g,
                                                           const VertexSet& fix) {
  for (VertexId v : fix)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size())
      throw DomainError("fixed set refers to a vertex outside the graph");
  std::vector<GraphAutomorphism> out;
  for (const GraphAutomorphism& p : enumerate_aut(g)) {
    bool fixes = true;
    for (VertexId v : fix)
      if (p(v) != v) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(p);
  }
  return out;
}

inline Word apply_word(const GraphAutomorphism& p, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (VertexId v : w) out.push_back(p(v));
  return out;
}

// Extend a permutation of the induced subgraph on sub (indexed in sub order)
// to the whole vertex set by the identity elsewhere. Rejects extensions that
// fail to preserve weights globally.
inline GraphAutomorphism extend_by_identity(const DefiningGraph& g, const VertexSet& sub,
                                            const GraphAutomorphism& p_on_sub) {
  if (p_on_sub.size() != sub.size())
    throw DomainError("permutation size does not match subset size");
  std::vector<VertexId> img(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) img[i] = static_cast<VertexId>(i);
  for (std::size_t i = 0; i < sub.size(); ++i)
    img[sub.ids()[i]] = sub.ids()[p_on_sub(static_cast<VertexId>(i))];
  GraphAutomorphism p(std::move(img));
  if (!is_weight_preserving(g, p))
    throw DomainError("extension by the identity is not weight-preserving");
  return p;
}

}  // namespace coxcay
