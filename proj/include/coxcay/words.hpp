#pragma once

#include <cstddef>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "coxcay/defgraph.hpp"

namespace coxcay {

// A word is a sequence of generator indices; the empty word is the identity.
using Word = std::vector<VertexId>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (VertexId v : w) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class NormalForm;
inline NormalForm canonical(const DefiningGraph& g, const Word& w, const Limits& lim);

// Reduced word that is shortlex-least among all reduced words of its element.
// Instances come out of canonical() and the arithmetic built on it.
class NormalForm {
 public:
  NormalForm() = default;  // identity
  const Word& word() const { return w_; }
  std::size_t length() const { return w_.size(); }
  bool is_identity() const { return w_.empty(); }
  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.w_ == b.w_; }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }
  // shortlex
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    if (a.w_.size() != b.w_.size()) return a.w_.size() < b.w_.size();
    return a.w_ < b.w_;
  }

 private:
  explicit NormalForm(Word w) : w_(std::move(w)) {}
  friend NormalForm canonical(const DefiningGraph&, const Word&, const Limits&);
  Word w_;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const { return WordHash{}(nf.word()); }
};

namespace detail {

// All words obtainable from w by a single braid move: an alternating block
// x,y,x,... of length m(x,y) replaced by y,x,y,...
inline std::vector<Word> braid_neighbors(const DefiningGraph& g, const Word& w) {
  std::vector<Word> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    VertexId x = w[i], y = w[i + 1];
    if (x == y) continue;
    Weight wt = g.weight(x, y);
    if (!wt.is_finite()) continue;
    const std::size_t m = wt.value();
    if (i + m > n) continue;
    bool alternating = true;
    for (std::size_t k = 0; k < m; ++k)
      if (w[i + k] != (k % 2 == 0 ? x : y)) {
        alternating = false;
        break;
      }
    if (!alternating) continue;
    Word u = w;
    for (std::size_t k = 0; k < m; ++k) u[i + k] = (k % 2 == 0 ? y : x);
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace detail

// Closure of {w} under single braid moves, sorted lexicographically.
inline std::vector<Word> braid_orbit(const DefiningGraph& g, const Word& w,
                                     const Limits& lim = {}) {
  for (VertexId v : w)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size())
      throw DomainError("word refers to a vertex outside the graph");
  std::unordered_set<Word, WordHash> seen{w};
  std::queue<Word> todo;
  todo.push(w);
  while (!todo.empty()) {
    Word cur = std::move(todo.front());
    todo.pop();
    for (Word& next : detail::braid_neighbors(g, cur)) {
      if (seen.insert(next).second) {
        if (seen.size() > lim.max_orbit)
          throw LimitError("braid orbit exceeds cap " + std::to_string(lim.max_orbit));
        todo.push(std::move(next));
      }
    }
  }
  std::vector<Word> orbit(seen.begin(), seen.end());
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

// Reduced word for the element of w: search the braid orbit for a member with
// two equal consecutive letters, cancel them, repeat. A word none of whose
// orbit members admits such a cancellation is reduced.
inline Word reduce(const DefiningGraph& g, const Word& w, const Limits& lim = {}) {
  Word cur = w;
  for (;;) {
    bool cancelled = false;
    for (const Word& u : braid_orbit(g, cur, lim)) {
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == u[i + 1]) {
          Word shorter(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
          shorter.insert(shorter.end(), u.begin() + static_cast<std::ptrdiff_t>(i) + 2, u.end());
          cur = std::move(shorter);
          cancelled = true;
          break;
        }
      }
      if (cancelled) break;
    }
    if (!cancelled) return cur;
  }
}

inline NormalForm canonical(const DefiningGraph& g, const Word& w, const Limits& lim = {}) {
  Word red = reduce(g, w, lim);
  std::vector<Word> orbit = braid_orbit(g, red, lim);
  return NormalForm(orbit.front());  // all members share one length: lex = shortlex
}

inline bool equal(const DefiningGraph& g, const Word& w1, const Word& w2,
                  const Limits& lim = {}) {
  return canonical(g, w1, lim) == canonical(g, w2, lim);
}

inline std::size_t length(const DefiningGraph& g, const Word& w, const Limits& lim = {}) {
  return reduce(g, w, lim).size();
}

inline NormalForm multiply(const DefiningGraph& g, const NormalForm& u,
                           const NormalForm& v, const Limits& lim = {}) {
  Word prod = u.word();
  prod.insert(prod.end(), v.word().begin(), v.word().end());
  return canonical(g, prod, lim);
}

inline NormalForm multiply(const DefiningGraph& g, const NormalForm& u, VertexId x,
                           const Limits& lim = {}) {
  Word prod = u.word();
  prod.push_back(x);
  return canonical(g, prod, lim);
}

// Generators are involutions, so inversion is word reversal.
inline NormalForm inverse(const DefiningGraph& g, const NormalForm& u,
                          const Limits& lim = {}) {
  Word rev(u.word().rbegin(), u.word().rend());
  return canonical(g, rev, lim);
}

// Letter set of the reduced word; braid moves never change it, so this is a
// well-defined invariant of the element.
inline VertexSet support(const DefiningGraph& g, const NormalForm& w) {
  (void)g;
  return VertexSet(Word(w.word()));
}

inline bool parabolic_member(const DefiningGraph& g, const NormalForm& w,
                             const VertexSet& sub) {
  for (VertexId x : support(g, w))
    if (!sub.contains(x)) return false;
  return true;
}

// Shortlex-least minimal-length element of the left coset w·W_sub, found by a
// breadth-first search over right multiplications by sub generators that never
// increases length. Every coset element sits above the minimal one through a
// chain of such descents, so the search always reaches it.
inline NormalForm coset_key(const DefiningGraph& g, const NormalForm& w,
                            const VertexSet& sub, const Limits& lim = {}) {
  for (VertexId v : sub)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size())
      throw DomainError("subset refers to a vertex outside the graph");
  std::unordered_set<NormalForm, NormalFormHash> seen{w};
  std::queue<NormalForm> todo;
  todo.push(w);
  NormalForm best = w;
  while (!todo.empty()) {
    NormalForm cur = std::move(todo.front());
    todo.pop();
    if (cur < best) best = cur;
    for (VertexId x : sub) {
      NormalForm next = multiply(g, cur, x, lim);
      if (next.length() >= cur.length()) continue;
      if (seen.insert(next).second) {
        if (seen.size() > lim.max_coset)
          throw LimitError("coset search exceeds cap " + std::to_string(lim.max_coset));
        todo.push(std::move(next));
      }
    }
  }
  return best;
}

// Word I/O: space-separated generator names, identity = empty string.
inline Word parse_word(const DefiningGraph& g, std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) w.push_back(g.vertex(text.substr(start, i - start)));
  }
  return w;
}

inline std::string format_word(const DefiningGraph& g, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w[i]);
  }
  return out;
}

inline std::string format_word(const DefiningGraph& g, const NormalForm& nf) {
  return format_word(g, nf.word());
}

}  // namespace coxcay
