#include "straightedge/graphml.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace straightedge {

namespace {

struct XmlTag {
  std::string name;
  std::map<std::string, std::string> attrs;
  bool closing = false;      // </name>
  bool self_closing = false; // <name ... />
  std::size_t end = 0;       // offset just past '>'
};

// Scans one tag starting at text[pos] == '<'. Comments, declarations and
// processing instructions are skipped by the caller.
XmlTag parse_tag(const std::string& text, std::size_t pos) {
  XmlTag tag;
  std::size_t i = pos + 1;
  if (i < text.size() && text[i] == '/') {
    tag.closing = true;
    ++i;
  }
  const std::size_t name_start = i;
  while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                             text[i] == ':' || text[i] == '_' || text[i] == '-' ||
                             text[i] == '.'))
    ++i;
  tag.name = text.substr(name_start, i - name_start);
  if (tag.name.empty()) throw ParseError("malformed tag");

  while (i < text.size() && text[i] != '>') {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '/') {
      tag.self_closing = true;
      ++i;
      continue;
    }
    const std::size_t key_start = i;
    while (i < text.size() && text[i] != '=' && text[i] != '>' &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string key = text.substr(key_start, i - key_start);
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != '=') throw ParseError("attribute without value");
    ++i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || (text[i] != '"' && text[i] != '\'')) throw ParseError("unquoted attribute");
    const char quote = text[i++];
    const std::size_t val_start = i;
    while (i < text.size() && text[i] != quote) ++i;
    if (i >= text.size()) throw ParseError("unterminated attribute value");
    tag.attrs[key] = text.substr(val_start, i - val_start);
    ++i;
  }
  if (i >= text.size()) throw ParseError("unterminated tag");
  tag.end = i + 1;
  return tag;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) throw ParseError("trailing characters in number: " + s);
    return v;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a number: " + s);
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range: " + s);
  }
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ImportResult assemble(std::vector<Coord> coords,
                      const std::vector<std::pair<VertexId, VertexId>>& raw_edges) {
  ImportResult out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<EdgeKey> seen;
  for (const auto& [a, b] : raw_edges) {
    if (a == b || coords[static_cast<std::size_t>(a)] == coords[static_cast<std::size_t>(b)]) {
      ++out.zero_length_edges_dropped;
      continue;
    }
    seen.push_back(make_edge_key(a, b));
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (i > 0 && seen[i] == seen[i - 1]) {
      ++out.duplicate_edges_dropped;
      continue;
    }
    edges.emplace_back(seen[i].u, seen[i].v);
  }
  out.graph = build_graph(std::move(coords), edges);
  return out;
}

}  // namespace

ImportResult import_graphml(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  // key id -> attribute name ("x"/"y")
  std::map<std::string, std::string> key_names;
  struct NodeData {
    std::optional<double> x, y;
  };
  std::vector<std::string> node_order;
  std::map<std::string, NodeData> nodes;
  std::map<std::string, VertexId> node_ids;
  std::vector<std::pair<std::string, std::string>> edge_ids;

  std::string current_node;
  bool in_node = false;

  std::size_t pos = 0;
  while (true) {
    pos = text.find('<', pos);
    if (pos == std::string::npos) break;
    if (text.compare(pos, 4, "<!--") == 0) {
      const std::size_t end = text.find("-->", pos);
      if (end == std::string::npos) throw ParseError("unterminated comment");
      pos = end + 3;
      continue;
    }
    if (pos + 1 < text.size() && (text[pos + 1] == '?' || text[pos + 1] == '!')) {
      pos = text.find('>', pos);
      if (pos == std::string::npos) throw ParseError("unterminated declaration");
      ++pos;
      continue;
    }
    XmlTag tag = parse_tag(text, pos);
    const std::size_t after = tag.end;

    if (!tag.closing && tag.name == "key") {
      const auto id = tag.attrs.find("id");
      const auto attr = tag.attrs.find("attr.name");
      if (id != tag.attrs.end())
        key_names[id->second] = attr != tag.attrs.end() ? attr->second : id->second;
    } else if (!tag.closing && tag.name == "node") {
      const auto id = tag.attrs.find("id");
      if (id == tag.attrs.end()) throw ParseError("node without id");
      if (nodes.count(id->second)) throw ParseError("duplicate node id " + id->second);
      nodes[id->second] = NodeData{};
      node_order.push_back(id->second);
      current_node = id->second;
      in_node = !tag.self_closing;
    } else if (tag.closing && tag.name == "node") {
      in_node = false;
    } else if (!tag.closing && tag.name == "data" && in_node) {
      const auto key = tag.attrs.find("key");
      if (key == tag.attrs.end()) throw ParseError("data without key");
      const std::size_t close = text.find("</data>", after);
      if (close == std::string::npos) throw ParseError("unterminated data element");
      const std::string value = text.substr(after, close - after);
      const auto named = key_names.find(key->second);
      const std::string attr_name = named != key_names.end() ? named->second : key->second;
      if (attr_name == "x") nodes[current_node].x = parse_double(value);
      if (attr_name == "y") nodes[current_node].y = parse_double(value);
      pos = close + 7;
      continue;
    } else if (!tag.closing && tag.name == "edge") {
      const auto s = tag.attrs.find("source");
      const auto t = tag.attrs.find("target");
      if (s == tag.attrs.end() || t == tag.attrs.end())
        throw ParseError("edge without source/target");
      edge_ids.emplace_back(s->second, t->second);
    }
    pos = after;
  }
  if (node_order.empty()) throw ParseError("no nodes found in " + path);

  std::vector<Coord> coords;
  coords.reserve(node_order.size());
  for (std::size_t i = 0; i < node_order.size(); ++i) {
    const NodeData& nd = nodes[node_order[i]];
    if (!nd.x || !nd.y)
      throw MissingCoordinateAttribute("node " + node_order[i] + " lacks x or y");
    node_ids[node_order[i]] = static_cast<VertexId>(i);
    coords.emplace_back(*nd.x, *nd.y);
  }

  std::vector<std::pair<VertexId, VertexId>> raw_edges;
  raw_edges.reserve(edge_ids.size());
  for (const auto& [s, t] : edge_ids) {
    const auto si = node_ids.find(s);
    const auto ti = node_ids.find(t);
    if (si == node_ids.end() || ti == node_ids.end())
      throw ParseError("edge references unknown node " + (si == node_ids.end() ? s : t));
    raw_edges.emplace_back(si->second, ti->second);
  }
  return assemble(std::move(coords), raw_edges);
}

void write_graphml(const SpatialGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"x\" for=\"node\" attr.name=\"x\" attr.type=\"double\"/>\n"
      << "  <key id=\"y\" for=\"node\" attr.name=\"y\" attr.type=\"double\"/>\n"
      << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Coord& c = g.coord(v);
    out << "    <node id=\"n" << v << "\"><data key=\"x\">" << fmt_double(c.x())
        << "</data><data key=\"y\">" << fmt_double(c.y()) << "</data></node>\n";
  }
  for (std::int32_t i = 0; i < g.edge_count(); ++i) {
    const EdgeKey& e = g.edge(i);
    out << "    <edge source=\"n" << e.u << "\" target=\"n" << e.v << "\"/>\n";
  }
  out << "  </graph>\n</graphml>\n";
  if (!out) throw IoError("write failed for " + path);
}

ImportResult import_csv_graph(const std::string& vertex_path, const std::string& edge_path) {
  std::ifstream vin(vertex_path);
  if (!vin) throw IoError("cannot open " + vertex_path);
  std::vector<Coord> coords;
  std::string line;
  bool first = true;
  while (std::getline(vin, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string xs, ys;
    if (!std::getline(row, xs, ',') || !std::getline(row, ys)) throw ParseError("bad vertex row: " + line);
    try {
      coords.emplace_back(parse_double(xs), parse_double(ys));
    } catch (const ParseError&) {
      if (first) { first = false; continue; }  // header line
      throw;
    }
    first = false;
  }

  std::ifstream ein(edge_path);
  if (!ein) throw IoError("cannot open " + edge_path);
  std::vector<std::pair<VertexId, VertexId>> raw_edges;
  first = true;
  while (std::getline(ein, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string us, vs;
    if (!std::getline(row, us, ',') || !std::getline(row, vs)) throw ParseError("bad edge row: " + line);
    try {
      const long u = std::stol(us);
      const long v = std::stol(vs);
      if (u < 0 || v < 0 || u >= static_cast<long>(coords.size()) ||
          v >= static_cast<long>(coords.size()))
        throw IndexOutOfRange("edge endpoint out of range: " + line);
      raw_edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    } catch (const std::invalid_argument&) {
      if (first) { first = false; continue; }
      throw ParseError("bad edge row: " + line);
    }
    first = false;
  }
  return assemble(std::move(coords), raw_edges);
}

}  // namespace straightedge
