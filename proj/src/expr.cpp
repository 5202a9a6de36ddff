#include "lpa/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "lpa/rewrite.hpp"

namespace lpa {

namespace {

bool word_start(char c) { return c != '.' && c != '+' && c != '-' && c != '*' && c != ')'; }

// Splits at top-level occurrences of any char in `seps`; returns pieces and
// the separator preceding each piece ('\0' for the first).
std::vector<std::pair<char, std::string>> split_top(const std::string& s, std::string_view seps) {
  std::vector<std::pair<char, std::string>> out{{'\0', ""}};
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw ExprError("unbalanced ')'");
    if (depth == 0 && seps.find(c) != std::string_view::npos) {
      out.emplace_back(c, "");
      continue;
    }
    out.back().second += c;
  }
  if (depth != 0) throw ExprError("unbalanced '('");
  return out;
}

struct Parser {
  const GraphPtr& graph;
  const FieldSpec& field;

  FieldValue coefficient(const std::string& text) const {
    try {
      return field.parse_value(text);
    } catch (const FieldError&) {
      throw ExprError("malformed coefficient '" + text + "'");
    }
  }

  std::optional<Letter> resolve(std::string name) const {
    bool adjoint = false;
    if (!name.empty() && name.back() == '*') {
      adjoint = true;
      name.pop_back();
    }
    if (name.empty()) throw ExprError("empty factor");
    const Graph& g = *graph;
    if (auto v = g.find_vertex(name)) return Letter{LetterKind::vertex, *v};
    if (auto e = g.find_edge(name)) return Letter{adjoint ? LetterKind::ghost : LetterKind::edge, *e};
    return std::nullopt;
  }

  // The vertex a letter ends at on its right and starts at on its left.
  VertexIndex left_vertex(const Letter& l) const {
    const Graph& g = *graph;
    switch (l.kind) {
      case LetterKind::vertex: return l.index;
      case LetterKind::edge: return g.source(l.index);
      case LetterKind::ghost: return g.range(l.index);
    }
    return 0;
  }
  VertexIndex right_vertex(const Letter& l) const {
    const Graph& g = *graph;
    switch (l.kind) {
      case LetterKind::vertex: return l.index;
      case LetterKind::edge: return g.range(l.index);
      case LetterKind::ghost: return g.source(l.index);
    }
    return 0;
  }

  Element factors(const std::string& text) const {
    Word word;
    for (const auto& [sep, piece] : split_top(text, ".")) {
      if (piece.empty()) throw ExprError("syntax error: empty factor in '" + text + "'");
      auto letter = resolve(piece);
      if (!letter) {
        std::string name = piece.back() == '*' ? piece.substr(0, piece.size() - 1) : piece;
        throw ExprError("unknown identifier '" + name + "'");
      }
      if (!word.empty()) {
        const Letter& prev = word.back();
        bool free_pair = prev.kind == LetterKind::ghost && letter->kind == LetterKind::edge;
        if (!free_pair && right_vertex(prev) != left_vertex(*letter))
          throw ExprError("invalid monomial '" + text + "'");
      }
      word.push_back(*letter);
    }
    return evaluate_word(graph, field, word);
  }

  Element term(const std::string& text) const {
    if (text.empty()) throw ExprError("syntax error: empty term");
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && c == '*' && i + 1 < text.size() && word_start(text[i + 1])) {
        if (i == 0) throw ExprError("syntax error: missing coefficient");
        return scale(coefficient(text.substr(0, i)), factors(text.substr(i + 1)));
      }
    }
    if (split_top(text, ".").size() == 1 && !resolve(text)) {
      try {
        return scale(field.parse_value(text), Element::identity(graph, field));
      } catch (const FieldError&) {
        std::string bare = text.back() == '*' ? text.substr(0, text.size() - 1) : text;
        if (is_valid_identifier(bare)) throw ExprError("unknown identifier '" + bare + "'");
        throw ExprError("malformed coefficient '" + text + "'");
      }
    }
    return factors(text);
  }
};

}  // namespace

Element parse_element(std::string_view text, const GraphPtr& graph, const FieldSpec& field) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ExprError("syntax error: empty expression");

  Parser parser{graph, field};
  Element out(graph, field);
  auto pieces = split_top(s, "+-");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [sep, piece] = pieces[i];
    if (piece.empty()) {
      // a leading sign on the first term
      if (i == 0 && pieces.size() > 1) continue;
      throw ExprError("syntax error: dangling '" + std::string(1, sep ? sep : '+') + "'");
    }
    Element t = parser.term(piece);
    out = sep == '-' ? sub(out, t) : add(out, t);
  }
  return out;
}

std::string format_monomial(const Graph& g, const Monomial& m) {
  if (m.p.is_trivial() && m.q.is_trivial()) return g.vertex_name(m.p.base);
  std::string s;
  for (EdgeIndex e : m.p.edges) {
    if (!s.empty()) s += '.';
    s += g.edge_name(e);
  }
  for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it) {
    if (!s.empty()) s += '.';
    s += g.edge_name(*it) + "*";
  }
  return s;
}

std::string format_element(const Element& x) {
  if (x.is_zero()) return "0";
  const FieldSpec& k = x.field();
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    bool negative = k.prints_negative(c);
    FieldValue mag = negative ? k.neg(c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (!k.is_one(mag)) {
      std::string lit = k.format(mag);
      bool compound = lit.find_first_of("+-", 1) != std::string::npos;
      out += (compound ? "(" + lit + ")" : lit) + "*";
    }
    out += format_monomial(x.graph(), m);
  }
  return out;
}

}  // namespace lpa
