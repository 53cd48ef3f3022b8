#include "ramsey/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses the rest of `ls` as exactly `count` nonnegative integers.
void read_fields(std::istringstream& ls, std::size_t count, std::uint64_t* out,
                 std::size_t line_no) {
  for (std::size_t i = 0; i < count; ++i) {
    long long v;
    if (!(ls >> v) || v < 0) throw IoError("malformed field", line_no);
    out[i] = static_cast<std::uint64_t>(v);
  }
  std::string rest;
  if (ls >> rest) throw IoError("trailing junk", line_no);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0, seen = 0;
  Graph g(0);
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw IoError("repeated problem line", line_no);
      std::string kind;
      if (!(ls >> kind) || kind != "edge") throw IoError("expected 'p edge <n> <m>'", line_no);
      std::uint64_t fields[2];
      read_fields(ls, 2, fields, line_no);
      n = fields[0];
      m = fields[1];
      g = Graph(static_cast<std::size_t>(n));
      g.set_all_eligible(false);  // an edge list asserts no reflexive pairs
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) throw IoError("edge before problem line", line_no);
      std::uint64_t uv[2];
      read_fields(ls, 2, uv, line_no);
      if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n)
        throw IoError("edge endpoint out of range", line_no);
      if (uv[0] == uv[1]) throw IoError("self-loop edge", line_no);
      const std::size_t u = static_cast<std::size_t>(uv[0] - 1);
      const std::size_t v = static_cast<std::size_t>(uv[1] - 1);
      if (g.has_edge(u, v)) throw IoError("duplicate edge", line_no);
      g.add_edge(u, v);
      ++seen;
      continue;
    }
    throw IoError("unrecognized line tag '" + tag + "'", line_no);
  }
  if (!have_header) throw IoError("missing problem line", line_no);
  if (seen != m)
    throw IoError("edge count mismatch: header says " + std::to_string(m) + ", file has " +
                      std::to_string(seen),
                  line_no);
  return g;
}

Graph load_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return load_graph(in);
}

void save_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t u = g.neighbors(v).find_next(v); u != VertexSet::npos;
         u = g.neighbors(v).find_next(u))
      out << "e " << v + 1 << ' ' << u + 1 << '\n';
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  save_graph(out, g);
}

Model load_model(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag[0] == '#') continue;
    if (tag == "n") {
      if (have_header) throw IoError("repeated size line", line_no);
      std::uint64_t fields[1];
      read_fields(ls, 1, fields, line_no);
      if (fields[0] == 0) throw IoError("universe must be nonempty", line_no);
      if (fields[0] > UINT32_MAX) throw IoError("universe too large", line_no);
      n = fields[0];
      have_header = true;
      continue;
    }
    if (tag == "S") {
      if (!have_header) throw IoError("pair before size line", line_no);
      std::uint64_t ab[2];
      read_fields(ls, 2, ab, line_no);
      if (ab[0] >= n || ab[1] >= n) throw IoError("pair element out of range", line_no);
      const auto pair = std::make_pair(static_cast<std::uint32_t>(ab[0]),
                                       static_cast<std::uint32_t>(ab[1]));
      if (!seen.insert(pair).second) throw IoError("duplicate relation pair", line_no);
      pairs.push_back(pair);
      continue;
    }
    throw IoError("unrecognized line tag '" + tag + "'", line_no);
  }
  if (!have_header) throw IoError("missing size line", line_no);
  try {
    return Model(static_cast<std::size_t>(n), std::move(pairs));
  } catch (const PreconditionError& e) {
    throw IoError(e.what(), line_no);
  }
}

Model load_model(const std::filesystem::path& path) {
  auto in = open_in(path);
  return load_model(in);
}

void save_model(std::ostream& out, const Model& m) {
  out << "n " << m.size() << '\n';
  for (const auto& [a, b] : m.pairs()) out << "S " << a << ' ' << b << '\n';
}

void save_model(const std::filesystem::path& path, const Model& m) {
  auto out = open_out(path);
  save_model(out, m);
}

}  // namespace ramsey
