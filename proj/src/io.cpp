#include "lpa/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lpa/expr.hpp"

namespace lpa {

using json = nlohmann::ordered_json;

namespace {

std::string at(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": ";
}

json extended(const ExtendedNat& n) { return n.is_omega() ? json("omega") : json(n.value()); }

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw SyntaxError(where + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, _] : j.items())
    if (!allowed.count(k)) throw SyntaxError(where + ": unknown key '" + k + "'");
  for (const char* k : keys)
    if (!j.contains(k)) throw SyntaxError(where + ": missing key '" + k + "'");
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) throw SyntaxError(where + ": expected a string");
  return j.get<std::string>();
}

json graph_json(const Graph& g) {
  GraphDecl d = g.decl();
  json edges = json::array();
  for (const auto& e : d.edges) edges.push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  return {{"vertices", d.vertices}, {"edges", edges}};
}

Graph graph_from(const json& j) {
  only_keys(j, {"vertices", "edges"}, "graph");
  GraphDecl d;
  if (!j["vertices"].is_array() || !j["edges"].is_array()) throw SyntaxError("graph: expected arrays");
  for (const auto& v : j["vertices"]) d.vertices.push_back(str(v, "vertices"));
  for (const auto& e : j["edges"]) {
    only_keys(e, {"id", "src", "dst"}, "edge");
    d.edges.push_back({str(e["id"], "edge id"), str(e["src"], "edge src"), str(e["dst"], "edge dst")});
  }
  return Graph::from(d);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  GraphDecl d;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::pair<std::size_t, std::string>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.emplace_back(i + 1, line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    const auto& [col, word] = tokens[0];
    if (word == "vertex") {
      if (tokens.size() != 2) throw SyntaxError(at(n, col) + "expected 'vertex <id>'");
      d.vertices.push_back(tokens[1].second);
    } else if (word == "edge") {
      if (tokens.size() != 4) throw SyntaxError(at(n, col) + "expected 'edge <id> <source> <range>'");
      d.edges.push_back({tokens[1].second, tokens[2].second, tokens[3].second});
    } else {
      throw SyntaxError(at(n, col) + "unknown declaration '" + word + "'");
    }
  }
  return Graph::from(d);
}

std::string format_graph_text(const Graph& g) {
  std::string out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out += "vertex " + g.vertex_name(v) + "\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    out += "edge " + g.edge_name(e) + " " + g.vertex_name(g.source(e)) + " " + g.vertex_name(g.range(e)) + "\n";
  return out;
}

Graph parse_graph_json(std::string_view text) { return graph_from(parse_json(text)); }

std::string format_graph_json(const Graph& g) { return graph_json(g).dump(2) + "\n"; }

Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  return parse_graph_text(text);
}

std::string format_report_text(const DecisionReport& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  rows.emplace_back("field", r.field);
  rows.emplace_back("acyclic", yes(r.acyclic));
  for (const auto& [v, m] : r.mu_table) rows.emplace_back("mu(" + v + ")", m.to_string());
  rows.emplace_back("sigma", r.sigma.to_string());
  rows.emplace_back("properness_level", r.properness_level.to_string());
  rows.emplace_back("regular", yes(r.regular));
  rows.emplace_back("star_regular", yes(r.star_regular));
  rows.emplace_back("positive_definite_algebra", yes(r.positive_definite_algebra));
  rows.emplace_back("proper_algebra", to_string(r.proper_algebra.status));
  if (r.proper_algebra.certificate) rows.emplace_back("certificate", format_element(*r.proper_algebra.certificate));

  std::size_t width = 0;
  for (const auto& [k, _] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size(), ' ') + " : " + v + "\n";
  return out;
}

std::string format_report_json(const DecisionReport& r) {
  json mu = json::object();
  for (const auto& [v, m] : r.mu_table) mu[v] = extended(m);
  json proper = {{"status", to_string(r.proper_algebra.status)}};
  if (r.proper_algebra.certificate) proper["certificate"] = format_element(*r.proper_algebra.certificate);
  json j = {{"field", r.field},
            {"acyclic", r.acyclic},
            {"mu_table", mu},
            {"sigma", extended(r.sigma)},
            {"properness_level", extended(r.properness_level)},
            {"regular", r.regular},
            {"star_regular", r.star_regular},
            {"positive_definite_algebra", r.positive_definite_algebra},
            {"proper_algebra", proper}};
  return j.dump(2) + "\n";
}

std::string format_image_text(const Graph& g, const MatrixImage& m) {
  std::string out;
  for (const auto& b : m.blocks)
    out += "sink " + g.vertex_name(b.sink) + " (" + std::to_string(b.matrix.rows()) + "x" +
           std::to_string(b.matrix.cols()) + "): " + b.matrix.to_string() + "\n";
  return out;
}

std::string format_image_json(const Graph& g, const MatrixImage& m) {
  json blocks = json::array();
  for (const auto& b : m.blocks) {
    json rows = json::array();
    for (std::size_t i = 0; i < b.matrix.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < b.matrix.cols(); ++j) row.push_back(m.field.format(b.matrix.at(i, j)));
      rows.push_back(row);
    }
    blocks.push_back({{"sink", g.vertex_name(b.sink)}, {"size", b.matrix.rows()}, {"rows", rows}});
  }
  return blocks.dump(2) + "\n";
}

Certificate make_certificate(const std::string& kind, const Graph& g, const FieldSpec& k, const NamedElements& env,
                             const std::vector<std::string>& claims) {
  Certificate c{kind, g, k.name(), {}, claims};
  for (const auto& [name, x] : env) c.elements.emplace_back(name, format_element(x));
  return c;
}

std::string format_certificate_json(const Certificate& c) {
  json elements = json::object();
  for (const auto& [name, expr] : c.elements) elements[name] = expr;
  json j = {{"kind", c.kind}, {"graph", graph_json(c.graph)}, {"field", c.field},
            {"elements", elements}, {"claims", c.claims}};
  return j.dump(2) + "\n";
}

Certificate parse_certificate_json(std::string_view text) {
  json j = parse_json(text);
  only_keys(j, {"kind", "graph", "field", "elements", "claims"}, "certificate");
  Certificate c;
  c.kind = str(j["kind"], "kind");
  c.graph = graph_from(j["graph"]);
  c.field = str(j["field"], "field");
  if (!j["elements"].is_object()) throw SyntaxError("certificate: 'elements' must be an object");
  for (const auto& [name, expr] : j["elements"].items()) c.elements.emplace_back(name, str(expr, name));
  if (!j["claims"].is_array()) throw SyntaxError("certificate: 'claims' must be an array");
  for (const auto& claim : j["claims"]) c.claims.push_back(str(claim, "claim"));
  return c;
}

const std::vector<std::string>& required_claims(const std::string& kind) {
  if (kind == "regular") return claims::regular();
  if (kind == "projection") return claims::projection();
  if (kind == "improper") return claims::improper();
  if (kind == "unit") return claims::unit();
  if (kind == "extension") return claims::extension();
  throw SyntaxError("unknown certificate kind '" + kind + "'");
}

std::vector<ClaimResult> verify_certificate(const Certificate& c) {
  const auto& required = required_claims(c.kind);
  for (const auto& r : required)
    if (std::find(c.claims.begin(), c.claims.end(), r) == c.claims.end())
      throw SyntaxError("certificate lacks required claim '" + r + "'");
  GraphPtr g = share(c.graph);
  FieldSpec k = FieldSpec::parse(c.field);
  NamedElements env;
  for (const auto& [name, expr] : c.elements) env.emplace(name, parse_element(expr, g, k));
  return check_claims(c.claims, env);
}

}  // namespace lpa
