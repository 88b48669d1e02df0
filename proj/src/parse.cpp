#include "redinv/parse.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace redinv {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Character cursor over a document, with line/column-tagged errors.
/// `#` comments run to end of line and count as whitespace.
struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void die_at(Errc code, std::size_t at,
                           const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(code, "line " + std::to_string(line) + ", column " +
                   std::to_string(col) + ": " + msg);
  }
  [[noreturn]] void die(const std::string& msg) const {
    die_at(Errc::parse_error, pos, msg);
  }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  void skip_ws() {
    for (;;) {
      while (!eof() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (!eof() && text[pos] == '#') {
        while (!eof() && text[pos] != '\n') ++pos;
        continue;
      }
      break;
    }
  }

  bool try_char(char c) {
    skip_ws();
    if (!eof() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  /// ASCII '-' or the typographic minus U+2212.
  bool try_minus() {
    skip_ws();
    if (!eof() && text[pos] == '-') {
      ++pos;
      return true;
    }
    if (pos + 2 < text.size() &&
        static_cast<unsigned char>(text[pos]) == 0xE2 &&
        static_cast<unsigned char>(text[pos + 1]) == 0x88 &&
        static_cast<unsigned char>(text[pos + 2]) == 0x92) {
      pos += 3;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (eof() || text[pos] != c) die("expected " + what);
    ++pos;
  }

  bool at_ident() {
    skip_ws();
    return !eof() && ident_start(text[pos]);
  }
  std::string ident() {
    skip_ws();
    if (!at_ident()) die("expected an identifier");
    std::size_t s = pos;
    while (!eof() && ident_char(text[pos])) ++pos;
    return text.substr(s, pos - s);
  }

  bool at_digit() {
    skip_ws();
    return !eof() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  mpz_class integer() {
    skip_ws();
    if (!at_digit()) die("expected an integer");
    std::size_t s = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    return mpz_class(text.substr(s, pos - s));
  }
  std::uint32_t small_integer(const std::string& what) {
    skip_ws();
    std::size_t at = pos;
    mpz_class z = integer();
    if (!z.fits_uint_p())
      die_at(Errc::parse_error, at, what + " too large");
    return static_cast<std::uint32_t>(z.get_ui());
  }
};

/// Polynomial parser over a scanner; stops at the first character that
/// cannot continue a polynomial (',', ';', ')', end of input, ...).
class PolyParser {
 public:
  PolyParser(Scanner& sc, const FieldSpec& field,
             const std::vector<std::string>& vars, TermOrder ord)
      : sc_(sc), field_(field), vars_(vars), ord_(ord) {}

  Polynomial poly() {
    std::vector<Term> terms;
    sc_.skip_ws();
    std::size_t start = sc_.pos;
    int sign = 1;
    if (sc_.try_minus())
      sign = -1;
    else
      sc_.try_char('+');
    for (;;) {
      terms.push_back(term(sign));
      if (sc_.try_minus())
        sign = -1;
      else if (sc_.try_char('+'))
        sign = 1;
      else
        break;
    }
    if (terms.empty()) sc_.die_at(Errc::parse_error, start, "expected a polynomial");
    return Polynomial::make(field_, vars_.size(), ord_, std::move(terms));
  }

 private:
  /// [integer] factor* with '*' optional between pieces; at least one piece.
  Term term(int sign) {
    sc_.skip_ws();
    std::size_t start = sc_.pos;
    bool sawCoeff = false, sawFactor = false;
    mpz_class coeff = 1;
    Monomial mono(vars_.size(), 0);
    if (sc_.at_digit()) {
      coeff = sc_.integer();
      sawCoeff = true;
    }
    for (;;) {
      bool star = sc_.try_char('*');
      sc_.skip_ws();
      if (star) {
        if (sc_.eof() || !ident_start(sc_.peek()))
          sc_.die("expected a variable after '*'");
        factor(mono);
        sawFactor = true;
        continue;
      }
      if (!sc_.eof() && ident_start(sc_.peek())) {
        factor(mono);
        sawFactor = true;
        continue;
      }
      if (!sc_.eof() && std::isdigit(static_cast<unsigned char>(sc_.peek())))
        sc_.die(
            "unexpected integer (a coefficient may only start a term)");
      break;
    }
    if (!sawCoeff && !sawFactor)
      sc_.die_at(Errc::parse_error, start, "expected a term");
    if (sign < 0) coeff = -coeff;
    return Term{FieldElement::from_integer(field_, coeff), std::move(mono)};
  }

  /// variable ['^' exponent]; the variable resolves by longest match.
  void factor(Monomial& mono) {
    std::size_t at = sc_.pos;
    std::size_t best = std::string::npos, bestLen = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const std::string& v = vars_[i];
      if (v.size() > bestLen &&
          sc_.text.compare(sc_.pos, v.size(), v) == 0) {
        best = i;
        bestLen = v.size();
      }
    }
    if (best == std::string::npos) {
      std::size_t e = at;
      while (e < sc_.text.size() && ident_char(sc_.text[e])) ++e;
      sc_.die_at(Errc::semantic_error, at,
                 "unknown variable '" + sc_.text.substr(at, e - at) + "'");
    }
    sc_.pos += bestLen;
    std::uint64_t k = 1;
    if (sc_.try_char('^')) k = sc_.small_integer("exponent");
    std::uint64_t total = static_cast<std::uint64_t>(mono[best]) + k;
    if (total > std::numeric_limits<std::uint32_t>::max())
      sc_.die_at(Errc::parse_error, at, "exponent too large");
    mono[best] = static_cast<std::uint32_t>(total);
  }

  Scanner& sc_;
  const FieldSpec& field_;
  const std::vector<std::string>& vars_;
  TermOrder ord_;
};

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const FieldSpec& field,
                            const std::vector<std::string>& variables,
                            TermOrder order) {
  Scanner sc{text};
  Polynomial f = PolyParser(sc, field, variables, order).poly();
  sc.skip_ws();
  if (!sc.eof()) sc.die("unexpected input after the polynomial");
  return f;
}

const IdealHandle* ParsedInput::find(const std::string& name) const {
  for (const auto& ni : ideals)
    if (ni.name == name) return &ni.ideal;
  return nullptr;
}

ParsedInput parse_input(const std::string& text,
                        const std::string& ringName) {
  Scanner sc{text};
  std::optional<FieldSpec> fieldDecl;
  std::optional<std::vector<std::string>> varsDecl;
  std::vector<Polynomial> modGens;
  bool sawMod = false;
  std::optional<int> dimDecl;
  std::optional<bool> cmDecl;
  struct Pending {
    std::string name;
    std::vector<Polynomial> gens;
  };
  std::vector<Pending> pending;
  std::set<std::string> idealNames;

  auto need_context = [&](std::size_t at, const std::string& kw) {
    if (!fieldDecl || !varsDecl)
      sc.die_at(Errc::semantic_error, at,
                "'" + kw + "' requires 'char' and 'vars' to be declared first");
  };
  auto poly_list = [&]() {
    std::vector<Polynomial> gens;
    PolyParser pp(sc, *fieldDecl, *varsDecl, TermOrder::degrevlex);
    do {
      gens.push_back(pp.poly());
    } while (sc.try_char(','));
    return gens;
  };

  for (;;) {
    sc.skip_ws();
    if (sc.eof()) break;
    std::size_t kwAt = sc.pos;
    if (!sc.at_ident()) sc.die("expected a statement keyword");
    std::string kw = sc.ident();
    if (kw == "char") {
      if (fieldDecl)
        sc.die_at(Errc::semantic_error, kwAt, "duplicate 'char' statement");
      std::size_t at = sc.pos;
      mpz_class z = sc.integer();
      if (z == 0) {
        fieldDecl = FieldSpec::rationals();
      } else {
        if (!z.fits_ulong_p())
          sc.die_at(Errc::semantic_error, at, "characteristic too large");
        std::uint64_t p = z.get_ui();
        if (!is_prime_u64(p))
          sc.die_at(Errc::semantic_error, at,
                    "characteristic " + z.get_str() + " is not prime");
        fieldDecl = FieldSpec::prime(p);
      }
    } else if (kw == "vars") {
      if (varsDecl)
        sc.die_at(Errc::semantic_error, kwAt, "duplicate 'vars' statement");
      std::vector<std::string> names;
      while (sc.at_ident()) names.push_back(sc.ident());
      if (names.empty()) sc.die("expected at least one variable name");
      varsDecl = std::move(names);
    } else if (kw == "mod") {
      if (sawMod)
        sc.die_at(Errc::semantic_error, kwAt, "duplicate 'mod' statement");
      need_context(kwAt, kw);
      modGens = poly_list();
      sawMod = true;
    } else if (kw == "dim") {
      if (dimDecl)
        sc.die_at(Errc::semantic_error, kwAt, "duplicate 'dim' statement");
      dimDecl = static_cast<int>(sc.small_integer("dimension"));
    } else if (kw == "cm") {
      if (cmDecl)
        sc.die_at(Errc::semantic_error, kwAt, "duplicate 'cm' statement");
      std::size_t at = sc.pos;
      std::string b = sc.at_ident() ? sc.ident() : "";
      if (b != "true" && b != "false")
        sc.die_at(Errc::parse_error, at, "expected 'true' or 'false'");
      cmDecl = (b == "true");
    } else if (kw == "ideal") {
      need_context(kwAt, kw);
      std::size_t at = sc.pos;
      std::string name = sc.ident();
      if (name == "m")
        sc.die_at(Errc::semantic_error, at,
                  "ideal name 'm' is reserved for the maximal ideal");
      if (!idealNames.insert(name).second)
        sc.die_at(Errc::semantic_error, at,
                  "duplicate ideal name '" + name + "'");
      sc.expect('=', "'='");
      pending.push_back({std::move(name), poly_list()});
    } else {
      sc.die_at(Errc::parse_error, kwAt, "unknown statement '" + kw + "'");
    }
    sc.expect(';', "';'");
  }

  if (!fieldDecl) fail(Errc::semantic_error, "missing 'char' statement");
  if (!varsDecl) fail(Errc::semantic_error, "missing 'vars' statement");

  ParsedInput out;
  try {
    out.ring = make_ring(*fieldDecl, *varsDecl, std::move(modGens),
                         TermOrder::degrevlex, dimDecl, cmDecl.value_or(false),
                         ringName);
    for (auto& p : pending)
      out.ideals.push_back(
          {std::move(p.name), make_ideal(out.ring, std::move(p.gens))});
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error || e.code() == Errc::semantic_error)
      throw;
    fail(Errc::semantic_error, e.what());
  }
  return out;
}

std::string pretty_print(const ParsedInput& in) {
  const RingPresentation& R = *in.ring;
  const auto& names = R.variables();
  auto render = [&](const std::vector<Polynomial>& gens) {
    std::vector<std::string> parts;
    parts.reserve(gens.size());
    for (const auto& g : gens) parts.push_back(g.str(names));
    return join(parts, ", ");
  };

  std::string s = "char " + std::to_string(R.field().characteristic()) + ";\n";
  s += "vars " + join(names, " ") + ";\n";
  if (!R.defining_gens().empty()) s += "mod " + render(R.defining_gens()) + ";\n";
  if (R.dim_overridden()) s += "dim " + std::to_string(R.dim()) + ";\n";
  if (R.cm_asserted()) s += "cm true;\n";
  for (const auto& ni : in.ideals)
    s += "ideal " + ni.name + " = " + render(ni.ideal.generators) + ";\n";
  return s;
}

namespace {

/// expr := term ('+' term)*; term := power ('*' power)*;
/// power := primary ('^' INT)*; primary := IDENT | '(' polylist ')'.
class ExprParser {
 public:
  ExprParser(Scanner& sc, const ParsedInput& in) : sc_(sc), in_(in) {}

  IdealHandle expr() {
    IdealHandle v = term();
    while (sc_.try_char('+')) v = ideal_sum(v, term());
    return v;
  }

 private:
  IdealHandle term() {
    IdealHandle v = power();
    while (sc_.try_char('*')) v = ideal_product(v, power());
    return v;
  }

  IdealHandle power() {
    IdealHandle v = primary();
    while (sc_.try_char('^')) v = ideal_power(v, sc_.small_integer("exponent"));
    return v;
  }

  IdealHandle primary() {
    sc_.skip_ws();
    if (sc_.try_char('(')) {
      std::vector<Polynomial> gens;
      PolyParser pp(sc_, in_.ring->field(), in_.ring->variables(),
                    in_.ring->order());
      do {
        gens.push_back(pp.poly());
      } while (sc_.try_char(','));
      sc_.expect(')', "')'");
      return make_ideal(in_.ring, std::move(gens));
    }
    if (sc_.at_ident()) {
      std::size_t at = sc_.pos;
      std::string name = sc_.ident();
      if (name == "m") return maximal_ideal(in_.ring);
      if (const IdealHandle* h = in_.find(name)) return *h;
      sc_.die_at(Errc::semantic_error, at,
                 "unknown ideal name '" + name +
                     "' (polynomials must be parenthesized: \"(" + name +
                     ")\")");
    }
    sc_.die("expected an ideal name or a parenthesized generator list");
  }

  Scanner& sc_;
  const ParsedInput& in_;
};

}  // namespace

IdealHandle eval_ideal_expression(const std::string& text,
                                  const ParsedInput& in) {
  Scanner sc{text};
  IdealHandle v = ExprParser(sc, in).expr();
  sc.skip_ws();
  if (!sc.eof()) sc.die("unexpected input after the ideal expression");
  return v;
}

}  // namespace redinv
