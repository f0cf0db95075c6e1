#include "msd/codefile.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace msd {

namespace {

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw Error(origin + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

CodeSpec parse_code_file(const std::string& text, const std::string& origin) {
  std::map<std::string, std::pair<std::string, int>> kv;  // key -> (value, line)
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t colon = line.find(':');
    if (colon == std::string::npos) fail(origin, lineno, "expected 'key: value'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (kv.count(key)) fail(origin, lineno, "duplicate key '" + key + "'");
    kv[key] = {value, lineno};
  }

  auto require = [&](const std::string& key) -> std::pair<std::string, int> {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(origin + ": missing required key '" + key + "'");
    return it->second;
  };

  const auto [format, format_line] = require("format");
  const auto [n_str, n_line] = require("n");
  int n = 0;
  try {
    n = std::stoi(n_str);
  } catch (...) {
    fail(origin, n_line, "invalid qubit count '" + n_str + "'");
  }
  if (n < 1 || n > kMaxQubits) fail(origin, n_line, "qubit count out of range");

  int correction = -1;
  if (auto it = kv.find("correction"); it != kv.end()) {
    correction = rotation_index_by_label(it->second.first);
    if (correction < 0)
      fail(origin, it->second.second, "unknown rotation label '" + it->second.first + "'");
  }

  CodeSpec spec;
  spec.name = origin;
  spec.correction = correction;

  if (format == "cws") {
    const auto [graph_str, graph_line] = require("graph");
    const auto rows = split(graph_str, ';');
    if (static_cast<int>(rows.size()) != n) fail(origin, graph_line, "expected " + std::to_string(n) + " adjacency rows");
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        fail(origin, graph_line, "adjacency row " + std::to_string(i) + " must have " + std::to_string(n) + " bits");
      for (int j = 0; j < n; ++j) {
        const char c = rows[i][j];
        if (c != '0' && c != '1') fail(origin, graph_line, std::string("invalid adjacency bit '") + c + "'");
        if (c == '1') g.adj[i] |= uint8_t(1u << j);
      }
    }
    try {
      g.check();
    } catch (const Error& e) {
      fail(origin, graph_line, e.what());
    }
    const auto [w_str, w_line] = require("codeword");
    if (static_cast<int>(w_str.size()) != n) fail(origin, w_line, "codeword must have " + std::to_string(n) + " bits");
    unsigned w = 0;
    for (int i = 0; i < n; ++i) {
      if (w_str[i] != '0' && w_str[i] != '1') fail(origin, w_line, std::string("invalid codeword bit '") + w_str[i] + "'");
      if (w_str[i] == '1') w |= 1u << i;
    }
    CwsCode code{g, w, correction};
    try {
      code.check();
    } catch (const Error& e) {
      fail(origin, w_line, e.what());
    }
    spec.body = code;
  } else if (format == "stabilizer") {
    GeneratorSet gs;
    gs.n = n;
    const auto [gens_str, gens_line] = require("generators");
    try {
      for (const std::string& s : split(gens_str, ',')) gs.generators.push_back(parse_pauli(s));
      gs.logical_z = parse_pauli(require("logical_z").first);
      gs.logical_x = parse_pauli(require("logical_x").first);
      gs.validate();
    } catch (const Error& e) {
      fail(origin, gens_line, e.what());
    }
    spec.body = gs;
  } else {
    fail(origin, format_line, "format must be 'cws' or 'stabilizer'");
  }
  return spec;
}

CodeSpec load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open code file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  CodeSpec spec = parse_code_file(ss.str(), path);
  spec.name = path;
  return spec;
}

std::string serialize_code(const CodeSpec& code) {
  std::string out;
  if (std::holds_alternative<CwsCode>(code.body)) {
    const CwsCode& c = std::get<CwsCode>(code.body);
    out += "format: cws\n";
    out += "n: " + std::to_string(c.graph.n) + "\n";
    out += "graph: ";
    for (int i = 0; i < c.graph.n; ++i) {
      if (i) out += ';';
      for (int j = 0; j < c.graph.n; ++j) out += c.graph.has_edge(i, j) ? '1' : '0';
    }
    out += "\ncodeword: ";
    for (int i = 0; i < c.graph.n; ++i) out += (c.codeword >> i) & 1 ? '1' : '0';
    out += '\n';
  } else {
    const GeneratorSet& gs = std::get<GeneratorSet>(code.body);
    out += "format: stabilizer\n";
    out += "n: " + std::to_string(gs.n) + "\n";
    out += "generators: ";
    for (size_t i = 0; i < gs.generators.size(); ++i) {
      if (i) out += ", ";
      out += format_pauli(gs.generators[i]);
    }
    out += "\nlogical_z: " + format_pauli(gs.logical_z);
    out += "\nlogical_x: " + format_pauli(gs.logical_x) + "\n";
  }
  const int corr = code.effective_correction();
  if (corr >= 0) out += "correction: " + octahedral_rotations()[corr].label + "\n";
  return out;
}

}  // namespace msd
