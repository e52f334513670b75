#include "locus/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace locus {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

// Splits a line into tokens; quoted tokens keep their quotes.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    if (line[i] == '"') {
      std::size_t end = line.find('"', i + 1);
      if (end == std::string::npos) return {};  // caller reports
      out.push_back(line.substr(i, end - i + 1));
      i = end + 1;
    } else {
      std::size_t end = i;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) &&
             line[end] != '#')
        ++end;
      out.push_back(line.substr(i, end - i));
      i = end;
    }
  }
  return out;
}

bool parse_int(const std::string& s, long& value) {
  try {
    std::size_t pos = 0;
    value = std::stol(s, &pos);
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

FlagComplex read_complex(std::istream& in, const LoadOptions& opts) {
  std::string line;
  int lineno = 0;
  std::string name;
  long declared = -1;
  bool saw_header = false;
  bool labeled = false, numeric = false;
  std::map<std::string, VertexId> label_ids;
  std::vector<std::string> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;

  auto resolve = [&](const std::string& tok, int ln) -> VertexId {
    if (tok.size() >= 2 && tok.front() == '"') {
      labeled = true;
      if (numeric) parse_error(ln, "cannot mix quoted labels and numeric vertex ids");
      std::string label = tok.substr(1, tok.size() - 2);
      auto it = label_ids.find(label);
      if (it != label_ids.end()) return it->second;
      if (static_cast<long>(labels.size()) >= declared)
        parse_error(ln, "more labels than declared vertices");
      VertexId id = static_cast<VertexId>(labels.size());
      label_ids[label] = id;
      labels.push_back(label);
      return id;
    }
    numeric = true;
    if (labeled) parse_error(ln, "cannot mix quoted labels and numeric vertex ids");
    long v = 0;
    if (!parse_int(tok, v)) parse_error(ln, "expected a vertex id or quoted label: " + tok);
    if (v < 0 || v >= declared) parse_error(ln, "vertex id out of range: " + tok);
    return static_cast<VertexId>(v);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks[0] != "complex" || toks.size() != 3)
        parse_error(lineno, "expected header: complex <name> <vertex-count>");
      name = toks[1];
      if (!parse_int(toks[2], declared) || declared < 0)
        parse_error(lineno, "bad vertex count: " + toks[2]);
      if (declared > opts.max_vertices)
        parse_error(lineno, "complex has " + std::to_string(declared) +
                                " vertices, over the limit of " +
                                std::to_string(opts.max_vertices));
      saw_header = true;
      continue;
    }
    if (toks[0] == "edge") {
      if (toks.size() != 3) parse_error(lineno, "expected: edge <u> <v>");
      VertexId u = resolve(toks[1], lineno);
      VertexId v = resolve(toks[2], lineno);
      if (u == v) parse_error(lineno, "self-loop on vertex " + toks[1]);
      for (auto [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u))
          parse_error(lineno, "duplicate edge " + toks[1] + " " + toks[2]);
      edges.emplace_back(u, v);
      continue;
    }
    parse_error(lineno, "unknown directive: " + toks[0]);
  }
  if (!saw_header) throw std::runtime_error("empty complex file");
  if (labeled) {
    while (static_cast<long>(labels.size()) < declared)
      labels.push_back("v" + std::to_string(labels.size()));
  }
  return FlagComplex(static_cast<int>(declared), edges, std::move(labels), name);
}

FlagComplex load_complex(const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_complex(in, opts);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

namespace {

bool needs_quotes(const std::string& label) {
  long v = 0;
  return !parse_int(label, v);
}

std::string format_label(const FlagComplex& x, VertexId v) {
  const std::string& l = x.label(v);
  return needs_quotes(l) ? "\"" + l + "\"" : l;
}

}  // namespace

void write_complex(std::ostream& out, const FlagComplex& x) {
  out << "complex " << (x.name().empty() ? "unnamed" : x.name()) << ' ' << x.vertex_count()
      << '\n';
  for (auto [u, v] : x.edges())
    out << "edge " << format_label(x, u) << ' ' << format_label(x, v) << '\n';
}

void save_complex(const std::string& path, const FlagComplex& x) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_complex(out, x);
}

SimplicialDisc read_disc(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::string name;
  bool saw_header = false;
  std::vector<Triangle> triangles;
  std::vector<VertexId> boundary;
  bool saw_boundary = false;

  auto vertex = [&](const std::string& tok, int ln) -> VertexId {
    long v = 0;
    if (!parse_int(tok, v) || v < 0) parse_error(ln, "expected a vertex id: " + tok);
    return static_cast<VertexId>(v);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks[0] != "disc" || toks.size() != 2) parse_error(lineno, "expected header: disc <name>");
      name = toks[1];
      saw_header = true;
      continue;
    }
    if (toks[0] == "tri") {
      if (toks.size() != 4) parse_error(lineno, "expected: tri <a> <b> <c>");
      triangles.emplace_back(vertex(toks[1], lineno), vertex(toks[2], lineno),
                             vertex(toks[3], lineno));
      continue;
    }
    if (toks[0] == "boundary") {
      if (saw_boundary) parse_error(lineno, "duplicate boundary line");
      if (toks.size() < 4) parse_error(lineno, "boundary needs at least 3 vertices");
      for (std::size_t i = 1; i < toks.size(); ++i) boundary.push_back(vertex(toks[i], lineno));
      saw_boundary = true;
      continue;
    }
    parse_error(lineno, "unknown directive: " + toks[0]);
  }
  if (!saw_header) throw std::runtime_error("empty disc file");
  if (!saw_boundary) throw std::runtime_error("disc file has no boundary line");
  return SimplicialDisc(std::move(triangles), std::move(boundary), name);
}

SimplicialDisc load_disc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_disc(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_disc(std::ostream& out, const SimplicialDisc& d) {
  out << "disc " << (d.name().empty() ? "unnamed" : d.name()) << '\n';
  for (const Triangle& t : d.triangles())
    out << "tri " << d.original_id(t.v[0]) << ' ' << d.original_id(t.v[1]) << ' '
        << d.original_id(t.v[2]) << '\n';
  out << "boundary";
  for (VertexId v : d.boundary()) out << ' ' << d.original_id(v);
  out << '\n';
}

void save_disc(const std::string& path, const SimplicialDisc& d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_disc(out, d);
}

void write_diagram(std::ostream& out, const SimplicialDisc& disc,
                   const std::vector<VertexId>& vertex_map, const FlagComplex& target) {
  write_disc(out, disc);
  for (VertexId v = 0; v < disc.vertex_count(); ++v)
    out << "map " << disc.original_id(v) << ' ' << format_label(target, vertex_map[v]) << '\n';
  out << "area " << disc.area() << '\n';
}

}  // namespace locus
