#include "steiner/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace steiner {

namespace {

std::vector<long long> numbers_of(const std::string& text) {
  std::vector<long long> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw InvalidInput("not an integer: " + tok);
      }
      if (used != tok.size()) throw InvalidInput("not an integer: " + tok);
      out.push_back(v);
    }
  }
  return out;
}

// First non-comment line holds the header.
std::size_t header_fields(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line.substr(0, line.find('#')));
    std::size_t k = 0;
    std::string tok;
    while (in >> tok) ++k;
    if (k) return k;
  }
  throw InvalidInput("empty graph file");
}

}  // namespace

GraphFile parse_graph_text(const std::string& text) {
  const std::size_t h = header_fields(text);
  if (h != 3 && h != 4) throw InvalidInput("header must be `n m |T| [tau]`");
  auto num = numbers_of(text);
  long long n = num[0], m = num[1], k = num[2];
  if (n <= 0 || m < 0 || k <= 0) throw InvalidInput("header counts out of range");
  if (m > static_cast<long long>(kMaxEdges)) throw InvalidInput("too many edges");
  const std::size_t need = h + 3 * static_cast<std::size_t>(m) + static_cast<std::size_t>(k);
  if (num.size() != need)
    throw InvalidInput("expected " + std::to_string(need) + " integers, found " + std::to_string(num.size()));
  GraphFile out;
  if (h == 4) {
    if (num[3] < 0) throw InvalidInput("negative tau");
    out.tau = num[3];
  }
  std::vector<Graph::Edge> edges;
  std::size_t at = h;
  for (long long i = 0; i < m; ++i, at += 3)
    edges.push_back({static_cast<int>(num[at]), static_cast<int>(num[at + 1]), num[at + 2]});
  VertexSet terms(num.begin() + static_cast<long>(at), num.end());
  if (make_set(terms).size() != terms.size()) throw InvalidInput("repeated terminal");
  out.graph = Graph(static_cast<int>(n), std::move(edges), std::move(terms));
  return out;
}

std::string graph_to_text(const Graph& g, std::optional<Weight> tau) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edges().size() << ' ' << g.terminals().size();
  if (tau) os << ' ' << *tau;
  os << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << ' ' << e.w << '\n';
  for (std::size_t i = 0; i < g.terminals().size(); ++i) os << (i ? " " : "") << g.terminals()[i];
  os << '\n';
  return os.str();
}

std::string solution_to_json(const EdgeAdditions& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : f.entries()) j.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}});
  return j.dump();
}

EdgeAdditions parse_solution_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed solution: ") + e.what());
  }
  if (!j.is_array()) throw InvalidInput("solution must be a JSON array");
  EdgeAdditions f;
  for (const auto& x : j) {
    if (!x.is_object() || !x.contains("u") || !x.contains("v") || !x.contains("w"))
      throw InvalidInput("solution entries need u, v and w");
    try {
      f.add(x["u"].get<int>(), x["v"].get<int>(), x["w"].get<Weight>());
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed solution entry: ") + e.what());
    }
  }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace steiner
