#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "coxcay/cayley.hpp"
#include "coxcay/classifier.hpp"
#include "coxcay/localaction.hpp"
#include "coxcay/oracle.hpp"

namespace coxcay {

using json = nlohmann::ordered_json;

inline json graph_to_json(const DefiningGraph& g) {
  json j;
  j["vertices"] = g.names();
  json edges = json::array();
  for (const auto& [u, v, m] : g.edges())
    edges.push_back(json::array({g.name(u), g.name(v), m}));
  j["edges"] = std::move(edges);
  return j;
}

inline DefiningGraph graph_from_json(const json& j, const Limits& lim = {}) {
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::tuple<std::string, std::string, std::uint32_t>> edges;
  for (const json& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                       e.at(2).get<std::uint32_t>());
  return DefiningGraph(std::move(names), edges, lim);
}

// Permutations as {vertex: image} over the names they act on.
inline json perm_to_json(const std::vector<std::string>& names, const GraphAutomorphism& p) {
  json j = json::object();
  for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = names[p(static_cast<VertexId>(i))];
  return j;
}

inline json perm_to_json(const DefiningGraph& g, const GraphAutomorphism& p) {
  return perm_to_json(g.names(), p);
}

inline json ball_to_json(const CayleyBall& ball) {
  const DefiningGraph& g = ball.graph();
  json j;
  j["graph"] = graph_to_json(g);
  j["center"] = format_word(g, ball.center());
  j["radius"] = ball.radius();
  json verts = json::array();
  for (const NormalForm& v : ball.vertices()) verts.push_back(format_word(g, v));
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& [a, b, x] : ball.edges())
    edges.push_back(json::array({a, b, g.name(x)}));
  j["edges"] = std::move(edges);
  return j;
}

// Parsed form of the ball document, for round-trip checks and consumers that
// only need the lists.
struct BallDocument {
  DefiningGraph graph;
  std::string center;
  int radius;
  std::vector<std::string> vertices;
  std::vector<std::tuple<int, int, std::string>> edges;
};

inline BallDocument ball_document_from_json(const json& j, const Limits& lim = {}) {
  BallDocument doc{graph_from_json(j.at("graph"), lim), j.at("center").get<std::string>(),
                   j.at("radius").get<int>(), {}, {}};
  for (const json& v : j.at("vertices")) doc.vertices.push_back(v.get<std::string>());
  for (const json& e : j.at("edges"))
    doc.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::string>());
  return doc;
}

inline std::string ball_to_dot(const CayleyBall& ball) {
  const DefiningGraph& g = ball.graph();
  std::string out = "graph cayley_ball {\n";
  for (const NormalForm& v : ball.vertices()) {
    std::string w = format_word(g, v);
    out += "  \"" + (w.empty() ? std::string("e") : w) + "\";\n";
  }
  for (const auto& [a, b, x] : ball.edges()) {
    std::string wa = format_word(g, ball.vertex(a));
    std::string wb = format_word(g, ball.vertex(b));
    if (wa.empty()) wa = "e";
    if (wb.empty()) wb = "e";
    out += "  \"" + wa + "\" -- \"" + wb + "\" [label=\"" + g.name(x) + "\"];\n";
  }
  out += "}\n";
  return out;
}

inline json verdict_to_json(const DefiningGraph& g, const Verdict& v) {
  json j;
  j["discrete"] = v.discrete;
  if (v.witness) {
    json w;
    w["vertex"] = g.name(v.witness->vertex);
    w["alpha"] = perm_to_json(g, v.witness->alpha);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  if (v.good_sep) {
    json gs;
    json s = json::array();
    for (VertexId x : v.good_sep->s) s.push_back(g.name(x));
    gs["S"] = std::move(s);
    json side = json::array();
    std::vector<std::string> side_names;
    for (VertexId x : v.good_sep->side) {
      side.push_back(g.name(x));
      side_names.push_back(g.name(x));
    }
    gs["gamma1"] = std::move(side);
    gs["alpha"] = perm_to_json(side_names, v.good_sep->alpha);
    j["good_separating_set"] = std::move(gs);
  } else {
    j["good_separating_set"] = nullptr;
  }
  j["aut_gamma_order"] = v.aut_order;
  return j;
}

inline json ball_auto_to_json(const BallAutomorphism& a) {
  json map = json::object();
  for (std::size_t i = 0; i < a.raw_map().size(); ++i) {
    if (a.raw_map()[i] < 0) continue;
    map[format_word(a.source().graph(), a.source().vertex(static_cast<int>(i)))] =
        format_word(a.target().graph(), a.target().vertex(a.raw_map()[i]));
  }
  json j;
  j["map"] = std::move(map);
  return j;
}

inline json report_to_json(const CrossValidationReport& r) {
  json j;
  j["constructed"] = r.constructed_count;
  j["oracle"] = r.oracle_count;
  j["matched"] = r.matched;
  j["unmatched"] = r.unmatched;
  j["all_matched"] = r.all_matched();
  return j;
}

}  // namespace coxcay
