#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcay/defgraph.hpp"
#include "coxcay/words.hpp"

#ifndef COXCAY_FIXTURE_DIR
#error "COXCAY_FIXTURE_DIR must point at the fixture directory"
#endif

namespace coxcay::testsupport {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline DefiningGraph load_fixture(const std::string& name) {
  return parse_graph(read_file(std::string(COXCAY_FIXTURE_DIR) + "/" + name + ".graph"));
}

inline std::string fixture_path(const std::string& name) {
  return std::string(COXCAY_FIXTURE_DIR) + "/" + name + ".graph";
}

// The worked examples exercised by the cross-cutting suites.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "k2", "dihedral3", "free2", "p4", "delta",
      "c4", "c5", "k4me", "tripend", "oneended"};
  return names;
}

inline Word w(const DefiningGraph& g, const std::string& text) {
  return parse_word(g, text);
}

}  // namespace coxcay::testsupport
