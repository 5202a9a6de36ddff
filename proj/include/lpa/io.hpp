#pragma once

// Text and JSON serialization of graphs, reports, matrix images and
// certificates.
//
// Graph text format, one declaration per line, '#' starts a comment:
//   vertex <id>
//   edge <id> <source-id> <range-id>
// JSON: {"vertices": [...], "edges": [{"id", "src", "dst"}, ...]}.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/decide.hpp"
#include "lpa/semisimple.hpp"
#include "lpa/witness.hpp"

namespace lpa {

/// Malformed input text; the message carries "line L, column C" when known.
class SyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws SyntaxError, or GraphError when the declarations are invalid.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);

/// Rejects unknown keys. Throws SyntaxError or GraphError.
Graph parse_graph_json(std::string_view text);
std::string format_graph_json(const Graph& g);

/// JSON when the first non-blank character is '{', text otherwise.
Graph parse_graph(std::string_view text);

/// "key : value" lines; JSON mirrors the same fields with omega as "omega".
std::string format_report_text(const DecisionReport& r);
std::string format_report_json(const DecisionReport& r);

std::string format_image_text(const Graph& g, const MatrixImage& m);
std::string format_image_json(const Graph& g, const MatrixImage& m);

/// A certificate: kind, graph, field, named element expressions and claims.
struct Certificate {
  std::string kind;
  Graph graph;
  std::string field;
  std::vector<std::pair<std::string, std::string>> elements;
  std::vector<std::string> claims;
};

Certificate make_certificate(const std::string& kind, const Graph& g, const FieldSpec& k, const NamedElements& env,
                             const std::vector<std::string>& claims);
std::string format_certificate_json(const Certificate& c);
Certificate parse_certificate_json(std::string_view text);

/// Claims every certificate of `kind` must carry.
const std::vector<std::string>& required_claims(const std::string& kind);

/// Re-parses the elements in the certificate's algebra and checks every
/// claim. Throws SyntaxError when a required claim is missing.
std::vector<ClaimResult> verify_certificate(const Certificate& c);

}  // namespace lpa
