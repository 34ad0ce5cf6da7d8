#pragma once

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxcay/serialize.hpp"

namespace coxcay::cli {

namespace detail {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

inline VertexSet vertex_set_from_csv(const DefiningGraph& g, const std::string& csv) {
  std::vector<VertexId> ids;
  for (const std::string& name : split_csv(csv))
    if (!name.empty()) ids.push_back(g.vertex(name));
  return VertexSet(std::move(ids));
}

// {vertex: image} over the given names; unmentioned vertices stay fixed.
inline GraphAutomorphism perm_from_json(const std::vector<std::string>& names, const json& j) {
  auto index_of = [&](const std::string& n) -> VertexId {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw DomainError("unknown vertex '" + n + "' in permutation");
    return static_cast<VertexId>(it - names.begin());
  };
  std::vector<VertexId> img(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) img[i] = static_cast<VertexId>(i);
  for (const auto& [key, value] : j.items())
    img[index_of(key)] = index_of(value.get<std::string>());
  return GraphAutomorphism(std::move(img));
}

// Configuration file: one configuration per nonempty line.
//   default <perm-json>
//   coset <gamma1-vertices> <nu-perm-json> <chi: comma-separated coset keys>
inline std::vector<Configuration> parse_config_file(const std::string& text,
                                                    std::shared_ptr<const CayleyBall> ball,
                                                    const Limits& lim) {
  const DefiningGraph& g = ball->graph();
  std::vector<Configuration> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string directive;
    ls >> directive;
    if (directive == "default") {
      std::string rest;
      std::getline(ls, rest);
      json perm;
      try {
        perm = json::parse(rest);
      } catch (const json::exception&) {
        throw ParseError(line_no, "invalid permutation JSON");
      }
      out.push_back(make_constant_config(ball, perm_from_json(g.names(), perm)));
    } else if (directive == "coset") {
      std::string gamma1_csv;
      ls >> gamma1_csv;
      std::string rest;
      std::getline(ls, rest);
      // the permutation JSON runs from the first '{' to its balanced '}'
      std::size_t open = rest.find('{');
      if (open == std::string::npos) throw ParseError(line_no, "expected permutation JSON");
      int depth = 0;
      std::size_t close = open;
      for (; close < rest.size(); ++close) {
        if (rest[close] == '{') ++depth;
        if (rest[close] == '}' && --depth == 0) break;
      }
      if (depth != 0) throw ParseError(line_no, "unbalanced permutation JSON");
      json perm;
      try {
        perm = json::parse(rest.substr(open, close - open + 1));
      } catch (const json::exception&) {
        throw ParseError(line_no, "invalid permutation JSON");
      }
      VertexSet side = vertex_set_from_csv(g, gamma1_csv);
      std::vector<std::string> side_names;
      for (VertexId v : side) side_names.push_back(g.name(v));
      GraphAutomorphism nu = perm_from_json(side_names, perm);
      std::vector<NormalForm> chi;
      for (const std::string& key_text : split_csv(rest.substr(close + 1))) {
        std::string trimmed = key_text;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
          trimmed.erase(trimmed.begin());
        while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t' ||
                                    trimmed.back() == '\r'))
          trimmed.pop_back();
        chi.push_back(canonical(g, parse_word(g, trimmed), lim));
      }
      out.push_back(make_coset_config(ball, side, nu, chi, lim));
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
  }
  return out;
}

// Least nontrivial symmetry of the side that yields a good separating set.
inline GraphAutomorphism derive_side_symmetry(const DefiningGraph& g, const VertexSet& side) {
  std::vector<VertexId> boundary;
  for (VertexId v : side)
    for (VertexId u = 0; u < static_cast<VertexId>(g.size()); ++u)
      if (!side.contains(u) && g.adjacent(u, v)) {
        boundary.push_back(v);
        break;
      }
  VertexSet s(std::move(boundary));
  for (const GraphAutomorphism& alpha : enumerate_aut(g.induced_subgraph(side)))
    if (!alpha.is_identity() && verify_good_sep(g, s, side, alpha)) return alpha;
  throw DomainError("no nontrivial symmetry of the side fixes its boundary");
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley-ball symmetry toolkit for Coxeter defining graphs"};
  app.require_subcommand(1);

  std::string file, center_text, format = "json", fix_csv, config_path, gamma1_csv;
  int radius = 0;
  bool fix_center = false;

  CLI::App* cmd_classify = app.add_subcommand("classify", "decide discreteness of the ball symmetry group");
  cmd_classify->add_option("file", file, "graph description file")->required();

  CLI::App* cmd_ball = app.add_subcommand("ball", "materialize a ball of the labelled graph");
  cmd_ball->add_option("file", file, "graph description file")->required();
  cmd_ball->add_option("--radius", radius, "ball radius")->required()->check(CLI::NonNegativeNumber);
  cmd_ball->add_option("--center", center_text, "center element as a word");
  cmd_ball->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));

  CLI::App* cmd_aut = app.add_subcommand("autgamma", "enumerate weight-preserving graph symmetries");
  cmd_aut->add_option("file", file, "graph description file")->required();
  cmd_aut->add_option("--fix", fix_csv, "comma-separated vertices to fix pointwise");

  CLI::App* cmd_goodsep = app.add_subcommand("goodsep", "find a good separating set");
  cmd_goodsep->add_option("file", file, "graph description file")->required();

  CLI::App* cmd_synth = app.add_subcommand("synth", "synthesize ball maps from a configuration file");
  cmd_synth->add_option("file", file, "graph description file")->required();
  cmd_synth->add_option("--radius", radius, "ball radius")->required()->check(CLI::NonNegativeNumber);
  cmd_synth->add_option("--config", config_path, "configuration file")->required();

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "enumerate all ball symmetries by brute force");
  cmd_oracle->add_option("file", file, "graph description file")->required();
  cmd_oracle->add_option("--radius", radius, "ball radius")->required()->check(CLI::NonNegativeNumber);
  cmd_oracle->add_flag("--fix-center", fix_center, "only symmetries fixing the center");

  CLI::App* cmd_count = app.add_subcommand("count-configs", "count distinct coset-driven ball maps");
  cmd_count->add_option("file", file, "graph description file")->required();
  cmd_count->add_option("--gamma1", gamma1_csv, "comma-separated side vertices")->required();
  cmd_count->add_option("--radius", radius, "ball radius")->required()->check(CLI::NonNegativeNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  const Limits lim = Limits::from_env();
  try {
    DefiningGraph g = parse_graph(detail::slurp(file), lim);

    if (cmd_classify->parsed()) {
      out << verdict_to_json(g, classify(g)).dump(2) << "\n";
    } else if (cmd_ball->parsed()) {
      NormalForm center = canonical(g, parse_word(g, center_text), lim);
      std::shared_ptr<const CayleyBall> ball = build_ball(g, radius, center, lim);
      if (format == "dot")
        out << ball_to_dot(*ball);
      else
        out << ball_to_json(*ball).dump(2) << "\n";
    } else if (cmd_aut->parsed()) {
      std::vector<GraphAutomorphism> list =
          cmd_aut->count("--fix") ? pointwise_stabilizer(g, detail::vertex_set_from_csv(g, fix_csv))
                                  : enumerate_aut(g);
      json j;
      j["count"] = list.size();
      json perms = json::array();
      for (const GraphAutomorphism& p : list) perms.push_back(perm_to_json(g, p));
      j["automorphisms"] = std::move(perms);
      out << j.dump(2) << "\n";
    } else if (cmd_goodsep->parsed()) {
      std::optional<GoodSeparatingSet> gs = find_good_separating_set(g);
      json j;
      j["found"] = gs.has_value();
      if (gs) {
        json s = json::array();
        for (VertexId v : gs->s) s.push_back(g.name(v));
        j["S"] = std::move(s);
        json side = json::array();
        std::vector<std::string> side_names;
        for (VertexId v : gs->side) {
          side.push_back(g.name(v));
          side_names.push_back(g.name(v));
        }
        j["gamma1"] = std::move(side);
        j["alpha"] = perm_to_json(side_names, gs->alpha);
      } else {
        j["S"] = nullptr;
        j["gamma1"] = nullptr;
        j["alpha"] = nullptr;
      }
      out << j.dump(2) << "\n";
    } else if (cmd_synth->parsed()) {
      std::shared_ptr<const CayleyBall> ball = build_ball(g, radius, {}, lim);
      std::vector<Configuration> configs =
          detail::parse_config_file(detail::slurp(config_path), ball, lim);
      json results = json::array();
      for (const Configuration& cfg : configs)
        results.push_back(ball_auto_to_json(synthesize(cfg, lim)));
      out << results.dump(2) << "\n";
    } else if (cmd_oracle->parsed()) {
      std::shared_ptr<const CayleyBall> ball = build_ball(g, radius, {}, lim);
      std::vector<int> fix;
      if (fix_center) fix.push_back(0);
      std::vector<BallAutomorphism> autos = enumerate_ball_autos(ball, fix, lim);
      json j;
      j["count"] = autos.size();
      json list = json::array();
      for (const BallAutomorphism& a : autos) list.push_back(ball_auto_to_json(a));
      j["automorphisms"] = std::move(list);
      out << j.dump(2) << "\n";
    } else if (cmd_count->parsed()) {
      VertexSet side = detail::vertex_set_from_csv(g, gamma1_csv);
      GraphAutomorphism nu = detail::derive_side_symmetry(g, side);
      std::shared_ptr<const CayleyBall> ball = build_ball(g, radius, {}, lim);

      std::set<NormalForm> keys;
      for (std::size_t i = 0; i < ball->size(); ++i)
        keys.insert(coset_key(g, ball->vertex(static_cast<int>(i)), side, lim));
      std::vector<NormalForm> eligible;
      for (const NormalForm& k : keys) {
        if (static_cast<int>(k.length()) + 1 > radius) continue;
        bool has_side_neighbor = false;
        for (VertexId y : side)
          if (ball->index_of(multiply(g, k, y, lim))) {
            has_side_neighbor = true;
            break;
          }
        if (has_side_neighbor) eligible.push_back(k);
      }
      if (eligible.size() > 16)
        throw LimitError("too many eligible cosets (" + std::to_string(eligible.size()) + ")");

      std::set<std::string> distinct;
      for (std::size_t mask = 0; mask < (std::size_t{1} << eligible.size()); ++mask) {
        std::vector<NormalForm> chi;
        for (std::size_t b = 0; b < eligible.size(); ++b)
          if (mask & (std::size_t{1} << b)) chi.push_back(eligible[b]);
        distinct.insert(synthesize(make_coset_config(ball, side, nu, chi, lim), lim).key());
      }

      json j;
      j["radius"] = radius;
      json side_json = json::array();
      for (VertexId v : side) side_json.push_back(g.name(v));
      j["gamma1"] = std::move(side_json);
      std::vector<std::string> side_names;
      for (VertexId v : side) side_names.push_back(g.name(v));
      j["nu"] = perm_to_json(side_names, nu);
      json keys_json = json::array();
      for (const NormalForm& k : eligible) keys_json.push_back(format_word(g, k));
      j["eligible_keys"] = std::move(keys_json);
      j["configurations"] = (std::size_t{1} << eligible.size());
      j["distinct_synthesized"] = distinct.size();
      out << j.dump(2) << "\n";
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const SynthesisError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace coxcay::cli
