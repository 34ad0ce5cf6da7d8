#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "coxcay/errors.hpp"
#include "coxcay/limits.hpp"

namespace coxcay {

using VertexId = int;

// Edge weight: a finite integer >= 1 or infinity. Infinity is its own state,
// never a sentinel value.
class Weight {
 public:
  constexpr Weight() = default;  // infinite
  static constexpr Weight infinity() { return Weight{}; }
  static constexpr Weight finite(std::uint32_t m) {
    Weight w;
    w.finite_ = true;
    w.value_ = m;
    return w;
  }
  constexpr bool is_finite() const { return finite_; }
  std::uint32_t value() const {
    if (!finite_) throw DomainError("weight is infinite");
    return value_;
  }
  friend constexpr bool operator==(Weight a, Weight b) {
    return a.finite_ == b.finite_ && a.value_ == b.value_;
  }
  friend constexpr bool operator!=(Weight a, Weight b) { return !(a == b); }
  // Finite weights ascending, infinity last.
  friend constexpr bool operator<(Weight a, Weight b) {
    if (a.finite_ != b.finite_) return a.finite_;
    return a.value_ < b.value_;
  }

 private:
  bool finite_ = false;
  std::uint32_t value_ = 0;
};

// Subset of the vertices of a graph, kept sorted and deduplicated.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }
  bool contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<VertexId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.ids_ == b.ids_;
  }

 private:
  std::vector<VertexId> ids_;
};

// Finite weighted defining graph. The edge set is derived from the weight
// table: {x,y} is an edge exactly when x != y and m(x,y) is finite.
class DefiningGraph {
 public:
  DefiningGraph(std::vector<std::string> names,
                const std::vector<std::tuple<std::string, std::string, std::uint32_t>>& edge_list,
                const Limits& lim = {})
      : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw DomainError("empty vertex name");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw DomainError("duplicate vertex '" + names_[i] + "'");
    }
    const std::size_t n = names_.size();
    weights_.assign(n * n, Weight::infinity());
    for (std::size_t i = 0; i < n; ++i) weights_[i * n + i] = Weight::finite(1);
    for (const auto& [u, v, m] : edge_list) set_edge(vertex(u), vertex(v), m, lim);
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const {
    check_vertex(v);
    return names_[v];
  }
  std::optional<VertexId> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<VertexId>(i);
    return std::nullopt;
  }
  VertexId vertex(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw DomainError("unknown vertex '" + std::string(name) + "'");
  }

  Weight weight(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return weights_[static_cast<std::size_t>(u) * names_.size() + v];
  }
  bool adjacent(VertexId u, VertexId v) const {
    return u != v && weight(u, v).is_finite();
  }

  VertexSet star(VertexId x) const {
    check_vertex(x);
    std::vector<VertexId> ids{x};
    for (VertexId y = 0; y < static_cast<VertexId>(size()); ++y)
      if (adjacent(x, y)) ids.push_back(y);
    return VertexSet(std::move(ids));
  }
  VertexSet link(VertexId x) const {
    check_vertex(x);
    std::vector<VertexId> ids;
    for (VertexId y = 0; y < static_cast<VertexId>(size()); ++y)
      if (adjacent(x, y)) ids.push_back(y);
    return VertexSet(std::move(ids));
  }

  VertexSet all_vertices() const {
    std::vector<VertexId> ids(size());
    for (std::size_t i = 0; i < size(); ++i) ids[i] = static_cast<VertexId>(i);
    return VertexSet(std::move(ids));
  }

  // Derived edge set as (u, v, m) with u < v, sorted.
  std::vector<std::tuple<VertexId, VertexId, std::uint32_t>> edges() const {
    std::vector<std::tuple<VertexId, VertexId, std::uint32_t>> out;
    for (VertexId u = 0; u < static_cast<VertexId>(size()); ++u)
      for (VertexId v = u + 1; v < static_cast<VertexId>(size()); ++v)
        if (adjacent(u, v)) out.emplace_back(u, v, weight(u, v).value());
    return out;
  }

  // Connected components of the subgraph induced on V minus omit, ordered by
  // least vertex.
  std::vector<VertexSet> connected_components(const VertexSet& omit) const {
    check_subset(omit);
    const VertexId n = static_cast<VertexId>(size());
    std::vector<bool> seen(size(), false);
    for (VertexId v : omit) seen[v] = true;
    std::vector<VertexSet> parts;
    for (VertexId v = 0; v < n; ++v) {
      if (seen[v]) continue;
      std::vector<VertexId> part, queue{v};
      seen[v] = true;
      while (!queue.empty()) {
        VertexId u = queue.back();
        queue.pop_back();
        part.push_back(u);
        for (VertexId w = 0; w < n; ++w)
          if (!seen[w] && adjacent(u, w)) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
      parts.emplace_back(std::move(part));
    }
    return parts;
  }

  DefiningGraph induced_subgraph(const VertexSet& vs) const {
    check_subset(vs);
    DefiningGraph sub;
    for (VertexId v : vs) sub.names_.push_back(names_[v]);
    const std::size_t k = sub.names_.size();
    sub.weights_.assign(k * k, Weight::infinity());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        sub.weights_[i * k + j] = weight(vs.ids()[i], vs.ids()[j]);
    return sub;
  }

  bool is_right_angled() const {
    for (VertexId u = 0; u < static_cast<VertexId>(size()); ++u)
      for (VertexId v = u + 1; v < static_cast<VertexId>(size()); ++v) {
        Weight w = weight(u, v);
        if (w.is_finite() && w.value() != 2) return false;
      }
    return true;
  }

  // Complement graph; defined for right-angled inputs only.
  DefiningGraph complement() const {
    if (!is_right_angled())
      throw DomainError("complement requires every edge weight to equal 2");
    DefiningGraph out;
    out.names_ = names_;
    const std::size_t n = size();
    out.weights_.assign(n * n, Weight::infinity());
    for (std::size_t i = 0; i < n; ++i) out.weights_[i * n + i] = Weight::finite(1);
    for (VertexId u = 0; u < static_cast<VertexId>(n); ++u)
      for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v)
        if (!adjacent(u, v)) {
          out.weights_[static_cast<std::size_t>(u) * n + v] = Weight::finite(2);
          out.weights_[static_cast<std::size_t>(v) * n + u] = Weight::finite(2);
        }
    return out;
  }

  bool is_separating(const VertexSet& s) const {
    check_subset(s);
    if (s.size() == size()) throw DomainError("separating set must be a proper subset");
    return connected_components(s).size() >= 2;
  }

  friend bool operator==(const DefiningGraph& a, const DefiningGraph& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  DefiningGraph() = default;

  void check_vertex(VertexId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= size())
      throw DomainError("vertex index out of range");
  }
  void check_subset(const VertexSet& vs) const {
    for (VertexId v : vs) check_vertex(v);
  }
  void set_edge(VertexId u, VertexId v, std::uint32_t m, const Limits& lim) {
    if (u == v) throw DomainError("self-loop at '" + names_[u] + "'");
    if (m < 2) throw DomainError("edge weight must be at least 2");
    if (m > lim.max_weight)
      throw LimitError("edge weight " + std::to_string(m) + " exceeds cap " +
                       std::to_string(lim.max_weight));
    const std::size_t n = size();
    Weight& slot = weights_[static_cast<std::size_t>(u) * n + v];
    if (slot.is_finite() && slot != Weight::finite(m))
      throw DomainError("conflicting weights for edge '" + names_[u] + " " + names_[v] + "'");
    slot = Weight::finite(m);
    weights_[static_cast<std::size_t>(v) * n + u] = Weight::finite(m);
  }

  std::vector<std::string> names_;
  std::vector<Weight> weights_;  // row-major size*size table
};

// Line-based graph description:
//   vertex <name>
//   edge <u> <v> <m>      (integer m >= 2)
// '#' starts a comment; unmentioned pairs have infinite weight.
inline DefiningGraph parse_graph(std::string_view text, const Limits& lim = {}) {
  std::vector<std::string> names;
  std::vector<std::tuple<std::string, std::string, std::uint32_t>> edges;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::string> tok;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tok.emplace_back(line.substr(start, i - start));
    }
    if (tok.empty()) continue;

    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw ParseError(line_no, "expected: vertex <name>");
      if (std::find(names.begin(), names.end(), tok[1]) != names.end())
        throw ParseError(line_no, "duplicate vertex '" + tok[1] + "'");
      names.push_back(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(line_no, "expected: edge <u> <v> <m>");
      for (int k = 1; k <= 2; ++k)
        if (std::find(names.begin(), names.end(), tok[k]) == names.end())
          throw ParseError(line_no, "unknown vertex '" + tok[k] + "'");
      if (tok[1] == tok[2]) throw ParseError(line_no, "self-loop at '" + tok[1] + "'");
      std::uint64_t m = 0;
      for (char c : tok[3]) {
        if (c < '0' || c > '9') throw ParseError(line_no, "invalid weight '" + tok[3] + "'");
        m = m * 10 + static_cast<std::uint64_t>(c - '0');
        if (m > lim.max_weight) break;
      }
      if (tok[3].empty()) throw ParseError(line_no, "invalid weight ''");
      if (m < 2) throw ParseError(line_no, "edge weight must be at least 2");
      if (m > lim.max_weight)
        throw ParseError(line_no, "edge weight " + tok[3] + " exceeds cap " +
                                      std::to_string(lim.max_weight));
      for (const auto& [u, v, prev] : edges) {
        bool same = (u == tok[1] && v == tok[2]) || (u == tok[2] && v == tok[1]);
        if (same && prev != m)
          throw ParseError(line_no, "conflicting weights for edge '" + tok[1] + " " + tok[2] + "'");
      }
      edges.emplace_back(tok[1], tok[2], static_cast<std::uint32_t>(m));
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  return DefiningGraph(std::move(names), edges, lim);
}

}  // namespace coxcay
