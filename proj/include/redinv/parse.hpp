#ifndef REDINV_PARSE_HPP
#define REDINV_PARSE_HPP

#include <string>
#include <vector>

#include "redinv/rings.hpp"

namespace redinv {

/// One polynomial from the shared text grammar: terms joined by `+` and
/// `-`; a term is an optional integer coefficient followed by variable
/// factors `x` or `x^k`, with `*` optional between factors; whitespace is
/// insignificant. Variable tokens resolve by longest match against
/// `variables`, so `xy` is `x*y` when both are declared (unless a variable
/// literally named `xy` exists). parse_error on malformed text,
/// semantic_error on unknown variables; both carry line/column.
Polynomial parse_polynomial(const std::string& text, const FieldSpec& field,
                            const std::vector<std::string>& variables,
                            TermOrder order);

struct NamedIdeal {
  std::string name;
  IdealHandle ideal;
};

/// A fully parsed ring-file document: the ring plus its named ideals in
/// declaration order.
struct ParsedInput {
  RingPtr ring;
  std::vector<NamedIdeal> ideals;

  /// nullptr if no ideal of that name was declared.
  const IdealHandle* find(const std::string& name) const;
};

/// Ring-file documents are `;`-terminated statements:
///
///   char <int>;                       required; 0 means the rationals
///   vars <name> <name> ...;           required; space-separated
///   mod <poly>, <poly>, ...;          optional defining ideal
///   dim <int>;                        optional dimension override
///   cm true|false;                    optional CM assertion (default false)
///   ideal <Name> = <poly>, ...;       any number, names unique, `m` reserved
///
/// `#` starts a comment through end of line. `char` and `vars` must appear
/// before any statement containing polynomials. Unknown statement keys are
/// errors. parse_error carries line/column; semantic_error covers unknown
/// variables, non-prime characteristic, duplicate statements/names, and
/// ring-construction failures (bad variable names, unit defining ideal).
/// `ringName` is carried as presentation metadata only (reports use it);
/// it is not part of the document grammar.
ParsedInput parse_input(const std::string& text,
                        const std::string& ringName = "");

/// Canonical ring-file text for a parsed document. Re-parsing the output
/// yields a structurally identical document (same field, variables,
/// defining generators, dim override, cm flag, and named ideals). Assumes
/// integer-representable coefficients, which holds for every parsed
/// document.
std::string pretty_print(const ParsedInput& in);

/// Ideal expressions for the command line over a parsed document:
///
///   primary := <IdealName> | m | ( <poly>, <poly>, ... )
///   expr    := primary, combined with `+`, `*`, `^` (binding ^ > * > +)
///
/// `m` is the maximal ideal. Examples: `(x,y)^2`, `I*m + J1^2`,
/// `(x^7, y^7)`. Bare polynomials must be parenthesized: `(x)`, not `x`.
IdealHandle eval_ideal_expression(const std::string& text,
                                  const ParsedInput& in);

}  // namespace redinv

#endif
