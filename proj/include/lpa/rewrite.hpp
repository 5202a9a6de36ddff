#pragma once

// Reduction of raw words in the generators v, e, e* by the defining
// relations, one adjacent-pair rewrite at a time:
//
//   v w   -> delta_{v,w} v               (V)
//   v e   -> delta_{v,s(e)} e,  e v -> delta_{r(e),v} e      (P1)
//   v e*  -> delta_{v,r(e)} e*, e* v -> delta_{s(e),v} e*    (P2)
//   e* f  -> delta_{e,f} r(e)            (CK1)
//   e f   -> 0 if r(e) != s(f),  e* f* -> 0 if s(e) != r(f),
//   e f*  -> 0 if r(e) != r(f)
//   f f*  -> s(f) - sum_{e != f} e e*    (CK2, f special)
//
// Irreducible words are exactly the normal monomials, so every schedule
// reaches the same Element; the two strategies exist to test that.

#include <vector>

#include "lpa/element.hpp"

namespace lpa {

enum class LetterKind { vertex, edge, ghost };

struct Letter {
  LetterKind kind;
  std::size_t index;

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct RawTerm {
  FieldValue coefficient;
  Word word;
};

enum class Strategy { leftmost, rightmost };

/// The generator word e_1...e_n f_m*...f_1* of p q* (a single vertex when both are trivial).
Word monomial_word(const Monomial& m);

/// Reduces every term by repeatedly rewriting the leftmost (or rightmost)
/// adjacent redex, then collects like terms.
Element reduce_words(GraphPtr graph, FieldSpec field, const std::vector<RawTerm>& terms,
                     Strategy strategy = Strategy::leftmost);

/// Evaluates a word as the product of generator Elements through mul().
Element evaluate_word(GraphPtr graph, FieldSpec field, const Word& word);

}  // namespace lpa
