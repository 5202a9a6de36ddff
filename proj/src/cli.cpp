#include "lpa/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpa/decide.hpp"
#include "lpa/expr.hpp"
#include "lpa/io.hpp"
#include "lpa/semisimple.hpp"
#include "lpa/witness.hpp"

namespace lpa::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t to_count(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(what + ": expected a non-negative integer, got '" + s + "'");
  return std::stoull(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) out.push_back(part);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "line:N", "rose:N", "toeplitz", "clock:N:M", or a graph file.
Graph load_graph(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    auto parts = split(source, ':');
    const std::string& kind = parts.empty() ? source : parts[0];
    if (kind == "line" && parts.size() == 2) return standard_graph(StandardKind::line, to_count(parts[1], "line"));
    if (kind == "rose" && parts.size() == 2) return standard_graph(StandardKind::rose, to_count(parts[1], "rose"));
    if (kind == "toeplitz" && parts.size() == 1) return standard_graph(StandardKind::toeplitz, 0);
    if (kind == "clock" && parts.size() == 3)
      return clock_graph(to_count(parts[1], "clock"), to_count(parts[2], "clock"));
    throw UsageError("'" + source + "' is neither a file nor a builtin graph (line:N, rose:N, toeplitz, clock:N:M)");
  }
  return parse_graph(read_file(source));
}

struct Context {
  std::ostream& out;
  bool as_json = false;
};

int analyze(Context& ctx, const Graph& g) {
  const bool acyclic = is_acyclic(g);
  auto table = mu_table(g);
  if (ctx.as_json) {
    json rows = json::array();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      auto special = g.special_edge(v);
      rows.push_back({{"id", g.vertex_name(v)},
                      {"sink", g.is_sink(v)},
                      {"source", g.is_source(v)},
                      {"out_degree", g.out_edges(v).size()},
                      {"special", special ? json(g.edge_name(*special)) : json(nullptr)},
                      {"mu", table[v].is_omega() ? json("omega") : json(table[v].value())}});
    }
    ExtendedNat s = sigma(g);
    json j = {{"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"acyclic", acyclic},
              {"sigma", s.is_omega() ? json("omega") : json(s.value())},
              {"table", rows}};
    if (acyclic) j["dimension"] = dimension(g);
    ctx.out << j.dump(2) << "\n";
    return kOk;
  }
  ctx.out << "vertices : " << g.vertex_count() << "\n"
          << "edges    : " << g.edge_count() << "\n"
          << "acyclic  : " << (acyclic ? "true" : "false") << "\n"
          << "sigma    : " << sigma(g).to_string() << "\n";
  if (acyclic) ctx.out << "dimension: " << dimension(g) << "\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto special = g.special_edge(v);
    ctx.out << "vertex " << g.vertex_name(v) << " : mu " << table[v].to_string() << ", out_degree "
            << g.out_edges(v).size() << (g.is_sink(v) ? ", sink" : "") << (g.is_source(v) ? ", source" : "");
    if (special) ctx.out << ", special " << g.edge_name(*special);
    ctx.out << "\n";
  }
  return kOk;
}

int decide(Context& ctx, const GraphPtr& g, const FieldSpec& k) {
  DecisionReport r = full_report(g, k);
  ctx.out << (ctx.as_json ? format_report_json(r) : format_report_text(r));
  return r.proper_algebra.status == ProperStatus::unknown ? kUnknown : kOk;
}

void print_element(Context& ctx, const Element& x) {
  if (ctx.as_json) ctx.out << json{{"field", x.field().name()}, {"element", format_element(x)}}.dump(2) << "\n";
  else ctx.out << format_element(x) << "\n";
}

std::vector<Element> parse_all(const std::vector<std::string>& exprs, const GraphPtr& g, const FieldSpec& k) {
  std::vector<Element> xs;
  for (const auto& e : exprs) xs.push_back(parse_element(e, g, k));
  return xs;
}

void print_certificate(Context& ctx, const Certificate& c, const std::string& status) {
  auto results = verify_certificate(c);
  if (ctx.as_json) {
    json j = json::parse(format_certificate_json(c));
    j["status"] = status;
    json verified = json::array();
    for (const auto& r : results) verified.push_back({{"claim", r.claim}, {"holds", r.holds}});
    j["verified"] = verified;
    ctx.out << j.dump(2) << "\n";
    return;
  }
  ctx.out << "kind   : " << c.kind << "\n"
          << "field  : " << c.field << "\n"
          << "status : " << status << "\n";
  for (const auto& [name, expr] : c.elements) ctx.out << name << " = " << expr << "\n";
  for (const auto& r : results) ctx.out << (r.holds ? "verified: " : "FAILED:   ") << r.claim << "\n";
}

int witness(Context& ctx, const std::string& kind, const std::string& target, const std::string& field,
            const std::vector<std::string>& exprs) {
  if (kind == "verify") {
    Certificate c = parse_certificate_json(read_file(target));
    auto results = verify_certificate(c);
    bool all = std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.holds; });
    print_certificate(ctx, c, all ? "verified" : "rejected");
    return all ? kOk : kInputError;
  }
  if (field.empty()) throw UsageError("witness " + kind + " requires --field");
  GraphPtr g = share(load_graph(target));
  FieldSpec k = FieldSpec::parse(field);

  if (kind == "improper") {
    auto a = improper_element(g, k);
    if (!a) {
      ctx.out << (ctx.as_json ? "{\n  \"kind\": \"improper\",\n  \"status\": \"none\"\n}\n" : "none\n");
      return kOk;
    }
    print_certificate(ctx, make_certificate("improper", *g, k, {{"a", *a}}, claims::improper()), "found");
    return kOk;
  }
  if (exprs.size() != 1) throw UsageError("witness " + kind + " requires exactly one -e expression");
  Element a = parse_element(exprs[0], g, k);

  if (kind == "regular") {
    Element b = regular_witness(a);
    print_certificate(ctx, make_certificate("regular", *g, k, {{"a", a}, {"b", b}}, claims::regular()), "found");
    return kOk;
  }
  if (kind == "projection") {
    try {
      ProjectionCertificate pc = projection_generator(a);
      print_certificate(ctx,
                        make_certificate("projection", *g, k, {{"a", a}, {"p", pc.p}, {"factor", pc.factor}},
                                         claims::projection()),
                        "found");
    } catch (const NotStarRegular& e) {
      if (!e.certificate()) throw;
      print_certificate(ctx, make_certificate("improper", *g, k, {{"a", *e.certificate()}}, claims::improper()),
                        "not_star_regular");
    }
    return kOk;
  }
  if (kind == "unit") {
    UnitRegularCertificate uc = unit_regular_witness(a);
    auto [w, w_prime] = extend_to_unit(uc.u, uc.u_prime, uc.v);
    std::vector<std::string> list = claims::unit();
    list.insert(list.end(), claims::extension().begin(), claims::extension().end());
    NamedElements env{{"a", a}, {"u", uc.u}, {"u'", uc.u_prime}, {"v", uc.v}, {"w", w}, {"w'", w_prime}};
    print_certificate(ctx, make_certificate("unit", *g, k, env, list), "found");
    return kOk;
  }
  throw UsageError("unknown witness kind '" + kind + "' (regular, projection, improper, unit, verify)");
}

int construct(Context& ctx, const std::string& kind, const std::vector<std::string>& params) {
  auto need = [&](std::size_t lo, std::size_t hi, const char* usage) {
    if (params.size() < lo || params.size() > hi) throw UsageError(std::string("usage: construct ") + usage);
  };
  Graph g;
  if (kind == "line") {
    need(1, 1, "line <n>");
    g = standard_graph(StandardKind::line, to_count(params[0], "n"));
  } else if (kind == "rose") {
    need(1, 1, "rose <n>");
    g = standard_graph(StandardKind::rose, to_count(params[0], "n"));
  } else if (kind == "toeplitz") {
    need(0, 0, "toeplitz");
    g = standard_graph(StandardKind::toeplitz, 0);
  } else if (kind == "clock") {
    need(2, 2, "clock <n> <m>");
    g = clock_graph(to_count(params[0], "n"), to_count(params[1], "m"));
  } else if (kind == "mn") {
    need(2, 2, "mn <graph> <n>");
    g = m_n_graph(load_graph(params[0]), to_count(params[1], "n"));
  } else if (kind == "ef") {
    need(2, static_cast<std::size_t>(-1), "ef <graph> <edge>...");
    g = e_f_graph(load_graph(params[0]), {params.begin() + 1, params.end()});
  } else {
    throw UsageError("unknown construction '" + kind + "' (line, rose, toeplitz, clock, mn, ef)");
  }
  ctx.out << (ctx.as_json ? format_graph_json(g) : format_graph_text(g));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in Leavitt path algebras of finite graphs", "lpa"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured output");

  std::string graph_arg, field, kind, target;
  std::vector<std::string> exprs, params;

  auto* analyze_cmd = app.add_subcommand("analyze", "Vertex table, mu, sigma and acyclicity");
  analyze_cmd->add_option("graph", graph_arg, "Graph file or builtin (line:N, rose:N, toeplitz, clock:N:M)")
      ->required();

  auto* decide_cmd = app.add_subcommand("decide", "Regularity, *-regularity and properness report");
  decide_cmd->add_option("graph", graph_arg)->required();
  decide_cmd->add_option("--field", field, "Q, Q[i]/id, Q[i]/conj, GF(p), GF(p,2)")->required();

  std::map<std::string, CLI::App*> element_cmds;
  for (const char* name : {"nf", "star", "phi", "mul"}) {
    auto* cmd = app.add_subcommand(name);
    cmd->add_option("graph", graph_arg)->required();
    cmd->add_option("--field", field)->required();
    cmd->add_option("-e,--expr", exprs, "Element expression")->required();
    element_cmds[name] = cmd;
  }
  element_cmds["nf"]->description("Normal form of an expression");
  element_cmds["star"]->description("Involution of an expression");
  element_cmds["phi"]->description("Matrix image of an expression (acyclic graphs)");
  element_cmds["mul"]->description("Product of two or more expressions, left to right");

  auto* witness_cmd = app.add_subcommand("witness", "Certificates: regular, projection, improper, unit, verify");
  witness_cmd->add_option("kind", kind)->required();
  witness_cmd->add_option("graph", target, "Graph, or certificate file for 'verify'")->required();
  witness_cmd->add_option("--field", field);
  witness_cmd->add_option("-e,--expr", exprs);

  auto* construct_cmd = app.add_subcommand("construct", "Build a graph: line, rose, toeplitz, clock, mn, ef");
  construct_cmd->add_option("kind", kind)->required();
  construct_cmd->add_option("params", params);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Context ctx{out, as_json};
  try {
    if (*analyze_cmd) return analyze(ctx, load_graph(graph_arg));
    if (*decide_cmd) return decide(ctx, share(load_graph(graph_arg)), FieldSpec::parse(field));
    if (*witness_cmd) return witness(ctx, kind, target, field, exprs);
    if (*construct_cmd) return construct(ctx, kind, params);

    GraphPtr g = share(load_graph(graph_arg));
    FieldSpec k = FieldSpec::parse(field);
    std::vector<Element> xs = parse_all(exprs, g, k);
    if (*element_cmds["mul"]) {
      if (xs.size() < 2) throw UsageError("mul requires at least two -e expressions");
      Element acc = xs[0];
      for (std::size_t i = 1; i < xs.size(); ++i) acc = mul(acc, xs[i]);
      print_element(ctx, acc);
      return kOk;
    }
    if (xs.size() != 1) throw UsageError("exactly one -e expression expected");
    if (*element_cmds["nf"]) print_element(ctx, xs[0]);
    else if (*element_cmds["star"]) print_element(ctx, star(xs[0]));
    else out << (as_json ? format_image_json(*g, phi(xs[0])) : format_image_text(*g, phi(xs[0])));
    return kOk;
  } catch (const GraphError& e) {
    for (const auto& msg : e.errors()) err << "error: " << msg << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace lpa::cli
