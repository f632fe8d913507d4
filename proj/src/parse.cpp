#include "pseudoflat/parse.hpp"

#include <algorithm>
#include <cctype>

namespace pseudoflat {

namespace {

enum class Tok {
  Int, Ident, Plus, Minus, Star, Slash, Caret,
  LParen, RParen, LBracket, RBracket, Comma, Equals, Newline, End,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Int: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
  }
  return "?";
}

// Newlines inside brackets are swallowed so matrices may span lines.
std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  int bracket_depth = 0;
  std::size_t i = 0;
  auto pos = [&] { return SourcePos{line, col}; };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      if (bracket_depth == 0 && !out.empty() && out.back().kind != Tok::Newline)
        out.push_back({Tok::Newline, "\\n", pos()});
      ++i; ++line; col = 1;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; ++col; continue; }
    SourcePos start = pos();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i++]; ++col;
      }
      out.push_back({Tok::Int, num, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        id += text[i++]; ++col;
      }
      out.push_back({Tok::Ident, id, start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; ++bracket_depth; break;
      case ']': kind = Tok::RBracket; bracket_depth = std::max(0, bracket_depth - 1); break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Equals; break;
      default:
        throw ParseError(start, "unexpected character", std::string(1, c));
    }
    out.push_back({kind, std::string(1, c), start});
    ++i; ++col;
  }
  if (!out.empty() && out.back().kind != Tok::Newline)
    out.push_back({Tok::Newline, "\\n", SourcePos{line, col}});
  out.push_back({Tok::End, "", SourcePos{line, col}});
  return out;
}

// A parsed scalar expression value. A bare "0" has no inherent degree, so it
// stays degree-free until combined or coerced.
struct FormValue {
  std::optional<ScalarForm> form;  // nullopt: literal zero

  bool is_zero() const { return !form.has_value() || form->is_zero(); }
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<std::string> vars)
      : tokens_(std::move(tokens)), vars_(std::move(vars)), dim_(vars_.size()) {}

  void bind_vars(std::vector<std::string> vars) {
    vars_ = std::move(vars);
    dim_ = vars_.size();
  }

  const Token& peek(int ahead = 0) const {
    std::size_t at = std::min(pos_ + static_cast<std::size_t>(ahead), tokens_.size() - 1);
    return tokens_[at];
  }
  const Token& advance() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool at(Tok t) const { return peek().kind == t; }
  bool accept(Tok t) {
    if (!at(t)) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok t, const char* what) {
    if (!at(t))
      throw ParseError(peek().pos, std::string("expected ") + tok_name(t) + " " + what,
                       peek().text);
    return advance();
  }
  static std::int64_t int_value(const Token& t) {
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      throw ParseError(t.pos, "integer literal out of range", t.text);
    }
  }
  void skip_newlines() {
    while (at(Tok::Newline)) ++pos_;
  }
  void expect_end(const char* what) {
    skip_newlines();
    if (!at(Tok::End))
      throw ParseError(peek().pos, std::string("unexpected trailing input in ") + what,
                       peek().text);
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& vars() const { return vars_; }

  std::optional<std::size_t> var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  // ---- scalar expressions ----------------------------------------------

  FormValue parse_expr() {
    bool neg = accept(Tok::Minus);
    FormValue v = parse_term();
    if (neg) v = negate(v);
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = advance();
      FormValue rhs = parse_term();
      v = combine(v, rhs, op.kind == Tok::Minus, op.pos);
    }
    return v;
  }

  FormValue parse_term() {
    FormValue v = parse_factor();
    while (at(Tok::Star) || at(Tok::Slash)) {
      Token op = advance();
      if (op.kind == Tok::Star) {
        FormValue rhs = parse_factor();
        v = wedge_values(v, rhs);
      } else {
        v = divide(v, parse_factor(), op.pos);
      }
    }
    return v;
  }

  FormValue parse_factor() {
    FormValue v = parse_atom();
    while (at(Tok::Caret)) {
      Token caret = advance();
      if (at(Tok::Int)) {
        long n = static_cast<long>(int_value(advance()));
        v = power(v, n, caret.pos);
      } else {
        FormValue rhs = parse_atom();
        v = wedge_values(v, rhs);
      }
    }
    return v;
  }

  FormValue parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        advance();
        std::int64_t n = int_value(t);
        if (n == 0) return FormValue{};
        return FormValue{ScalarForm::from_polynomial(Polynomial::constant(dim_, Rational(n)))};
      }
      case Tok::Ident: {
        advance();
        if (auto vi = var_index(t.text))
          return FormValue{ScalarForm::from_polynomial(Polynomial::variable(dim_, *vi))};
        if (t.text.size() > 1 && t.text[0] == 'd') {
          if (auto vi = var_index(t.text.substr(1)))
            return FormValue{ScalarForm::basis(dim_, *vi)};
        }
        throw ParseError(t.pos, "unknown identifier", t.text);
      }
      case Tok::LParen: {
        advance();
        FormValue v = parse_expr();
        expect(Tok::RParen, "to close '('");
        return v;
      }
      default:
        throw ParseError(t.pos, "expected a term", t.text);
    }
  }

  // ---- value combinators -------------------------------------------------

  static FormValue negate(FormValue v) {
    if (v.form) v.form = -*v.form;
    return v;
  }

  FormValue combine(const FormValue& a, const FormValue& b, bool subtract, SourcePos pos) const {
    if (!b.form) return a;
    FormValue rhs = subtract ? negate(b) : b;
    if (!a.form) return rhs;
    if (a.form->degree() != rhs.form->degree())
      throw ParseError(pos, "cannot add forms of different degree (" +
                                std::to_string(a.form->degree()) + " vs " +
                                std::to_string(rhs.form->degree()) + ")");
    return FormValue{*a.form + *rhs.form};
  }

  FormValue wedge_values(const FormValue& a, const FormValue& b) const {
    if (!a.form || !b.form) return FormValue{};
    return FormValue{wedge(*a.form, *b.form)};
  }

  FormValue divide(const FormValue& a, const FormValue& b, SourcePos pos) const {
    if (!b.form || b.form->degree() != 0 || !b.form->as_polynomial().is_constant() ||
        b.form->is_zero())
      throw ParseError(pos, "division is only defined by nonzero rational constants");
    Rational c = b.form->as_polynomial().constant_term();
    if (!a.form) return FormValue{};
    return FormValue{a.form->scaled(Rational(1) / c)};
  }

  FormValue power(const FormValue& v, long n, SourcePos pos) const {
    if (n < 0) throw ParseError(pos, "negative powers are not supported");
    FormValue acc{ScalarForm::from_polynomial(Polynomial::constant(dim_, Rational(1)))};
    for (long i = 0; i < n; ++i) acc = wedge_values(acc, v);
    return acc;
  }

  // ---- coercions ---------------------------------------------------------

  Polynomial to_polynomial(const FormValue& v, SourcePos pos) const {
    if (!v.form) return Polynomial(dim_);
    if (v.form->degree() != 0)
      throw ParseError(pos, "expected a polynomial, got a form of degree " +
                                std::to_string(v.form->degree()));
    return v.form->as_polynomial();
  }

  ScalarForm to_form(const FormValue& v, std::optional<std::size_t> expected_degree,
                     SourcePos pos) const {
    if (!v.form) return ScalarForm(dim_, expected_degree.value_or(0));
    if (expected_degree && v.form->degree() != *expected_degree && !v.form->is_zero())
      throw ParseError(pos, "expected a form of degree " + std::to_string(*expected_degree) +
                                ", got degree " + std::to_string(v.form->degree()));
    if (expected_degree && v.form->is_zero()) return ScalarForm(dim_, *expected_degree);
    return *v.form;
  }

  // ---- vector fields ------------------------------------------------------

  VectorField parse_field_expr(const Scene* scene) {
    bool neg = accept(Tok::Minus);
    VectorField v = parse_field_term(scene);
    if (neg) v = -v;
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = advance();
      VectorField rhs = parse_field_term(scene);
      v = op.kind == Tok::Minus ? v - rhs : v + rhs;
    }
    return v;
  }

  VectorField parse_field_term(const Scene* scene) {
    Polynomial coeff = Polynomial::constant(dim_, Rational(1));
    std::optional<VectorField> direction;
    SourcePos start = peek().pos;
    while (true) {
      if (at(Tok::Ident) && peek().text == "d" && peek(1).kind == Tok::Slash) {
        Token d = advance();
        advance();  // '/'
        Token base = expect(Tok::Ident, "after 'd/'");
        if (base.text.size() < 2 || base.text[0] != 'd' || !var_index(base.text.substr(1)))
          throw ParseError(base.pos, "expected d<variable> after 'd/'", base.text);
        if (direction)
          throw ParseError(d.pos, "field term has more than one d/d<var> factor");
        direction = VectorField::coordinate(dim_, *var_index(base.text.substr(1)));
      } else if (at(Tok::Ident) && scene && scene->fields.count(peek().text)) {
        Token name = advance();
        if (direction)
          throw ParseError(name.pos, "field term has more than one field factor");
        direction = scene->fields.at(name.text);
      } else {
        FormValue v = parse_factor();
        coeff = coeff * to_polynomial(v, start);
      }
      while (at(Tok::Slash)) {
        Token slash = advance();
        FormValue denom = parse_factor();
        FormValue numer{ScalarForm::from_polynomial(coeff)};
        coeff = to_polynomial(divide(numer, denom, slash.pos), slash.pos);
      }
      if (accept(Tok::Star)) continue;
      break;
    }
    if (!direction) {
      if (coeff.is_zero()) return VectorField::zero(dim_);
      throw ParseError(start, "field term needs a d/d<var> or named field factor");
    }
    return direction->scaled(coeff);
  }

  // ---- sections ------------------------------------------------------------

  BundleForm parse_section_expr(std::size_t rank, const Scene* scene) {
    bool neg = accept(Tok::Minus);
    BundleForm v = parse_section_term(rank, scene);
    if (neg) v = -v;
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = advance();
      BundleForm rhs = parse_section_term(rank, scene);
      v = op.kind == Tok::Minus ? v - rhs : v + rhs;
    }
    return v;
  }

  BundleForm parse_section_term(std::size_t rank, const Scene* scene) {
    Polynomial coeff = Polynomial::constant(dim_, Rational(1));
    std::optional<BundleForm> base;
    SourcePos start = peek().pos;
    while (true) {
      if (at(Tok::Ident) && is_frame_name(peek().text)) {
        Token name = advance();
        std::size_t index = frame_index(name.text, rank, name.pos);
        if (base) throw ParseError(name.pos, "section term has more than one frame factor");
        base = BundleForm::basis_section(rank, dim_, index);
      } else if (at(Tok::Ident) && scene && scene->sections.count(peek().text)) {
        Token name = advance();
        if (base) throw ParseError(name.pos, "section term has more than one section factor");
        base = scene->sections.at(name.text);
      } else {
        FormValue v = parse_factor();
        coeff = coeff * to_polynomial(v, start);
      }
      while (at(Tok::Slash)) {
        Token slash = advance();
        FormValue denom = parse_factor();
        FormValue numer{ScalarForm::from_polynomial(coeff)};
        coeff = to_polynomial(divide(numer, denom, slash.pos), slash.pos);
      }
      if (accept(Tok::Star)) continue;
      break;
    }
    if (!base) {
      if (coeff.is_zero()) return BundleForm(rank, 0, dim_);
      throw ParseError(start, "section term needs a frame (e<k>) or named section factor");
    }
    return base->scaled(coeff);
  }

  static bool is_frame_name(const std::string& s) {
    if (s.size() < 2 || s[0] != 'e') return false;
    return std::all_of(s.begin() + 1, s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  std::size_t frame_index(const std::string& s, std::size_t rank, SourcePos pos) const {
    long idx = 0;
    try {
      idx = std::stol(s.substr(1));
    } catch (const std::exception&) {
      throw ParseError(pos, "frame index out of range", s);
    }
    if (idx < 1 || static_cast<std::size_t>(idx) > rank)
      throw ParseError(pos, "frame index out of range for rank " + std::to_string(rank), s);
    return static_cast<std::size_t>(idx - 1);
  }

  // ---- bracket vectors and matrices -----------------------------------------

  BundleForm parse_component_vector(std::size_t rank, std::size_t degree) {
    Token open = expect(Tok::LBracket, "to start a component vector");
    std::vector<FormValue> raw;
    if (!at(Tok::RBracket)) {
      raw.push_back(parse_expr());
      while (accept(Tok::Comma)) raw.push_back(parse_expr());
    }
    expect(Tok::RBracket, "to close a component vector");
    if (raw.size() != rank)
      throw ParseError(open.pos, "expected " + std::to_string(rank) + " components, got " +
                                     std::to_string(raw.size()));
    std::vector<ScalarForm> comps;
    comps.reserve(rank);
    for (const auto& v : raw) comps.push_back(to_form(v, degree, open.pos));
    return BundleForm(std::move(comps));
  }

  struct MatrixEntry {
    FormValue value;
    SourcePos pos;
  };

  std::vector<std::vector<MatrixEntry>> parse_matrix() {
    expect(Tok::LBracket, "to start a matrix");
    std::vector<std::vector<MatrixEntry>> rows;
    while (true) {
      expect(Tok::LBracket, "to start a matrix row");
      std::vector<MatrixEntry> row;
      if (!at(Tok::RBracket)) {
        SourcePos pos = peek().pos;
        row.push_back({parse_expr(), pos});
        while (accept(Tok::Comma)) {
          pos = peek().pos;
          row.push_back({parse_expr(), pos});
        }
      }
      expect(Tok::RBracket, "to close a matrix row");
      rows.push_back(std::move(row));
      if (!accept(Tok::Comma)) break;
    }
    expect(Tok::RBracket, "to close a matrix");
    return rows;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
  std::size_t dim_;
};

void check_declared_name(const std::string& name, const std::vector<std::string>& variables,
                         SourcePos pos) {
  for (const auto& v : variables) {
    if (name == v)
      throw ParseError(pos, "'" + name + "' collides with a chart variable", name);
    if (name == "d" + v)
      throw ParseError(pos, "'" + name + "' collides with the differential of '" + v + "'", name);
  }
}

void check_variable_names(const std::vector<std::string>& names, SourcePos pos) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string& m = names[i];
    if (m == "d") throw ParseError(pos, "'d' is reserved for differentials");
    if (Parser::is_frame_name(m))
      throw ParseError(pos, "'" + m + "' is reserved for frame sections");
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (i == j) continue;
      if (names[i] == names[j]) throw ParseError(pos, "duplicate variable '" + m + "'");
      if (m.size() > 1 && m[0] == 'd' && m.substr(1) == names[j])
        throw ParseError(pos, "variable '" + m + "' collides with the differential of '" +
                                  names[j] + "'");
    }
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars) {
  Parser p(lex(text), {vars.begin(), vars.end()});
  p.skip_newlines();
  SourcePos pos = p.peek().pos;
  FormValue v = p.parse_expr();
  p.expect_end("polynomial");
  return p.to_polynomial(v, pos);
}

ScalarForm parse_form(std::string_view text, std::span<const std::string> vars,
                      std::optional<std::size_t> expected_degree) {
  Parser p(lex(text), {vars.begin(), vars.end()});
  p.skip_newlines();
  SourcePos pos = p.peek().pos;
  FormValue v = p.parse_expr();
  p.expect_end("form");
  return p.to_form(v, expected_degree, pos);
}

VectorField parse_field(std::string_view text, std::span<const std::string> vars,
                        const Scene* scene) {
  Parser p(lex(text), {vars.begin(), vars.end()});
  p.skip_newlines();
  VectorField v = p.parse_field_expr(scene);
  p.expect_end("vector field");
  return v;
}

BundleForm parse_section(std::string_view text, std::span<const std::string> vars,
                         std::size_t rank, const Scene* scene) {
  Parser p(lex(text), {vars.begin(), vars.end()});
  p.skip_newlines();
  if (p.at(Tok::LBracket)) {
    BundleForm v = p.parse_component_vector(rank, 0);
    p.expect_end("section");
    return v;
  }
  BundleForm v = p.parse_section_expr(rank, scene);
  p.expect_end("section");
  return v;
}

BundleForm parse_bundle_form(std::string_view text, std::span<const std::string> vars,
                             std::size_t rank, std::size_t degree) {
  Parser p(lex(text), {vars.begin(), vars.end()});
  p.skip_newlines();
  BundleForm v = p.parse_component_vector(rank, degree);
  p.expect_end("bundle form");
  return v;
}

Scene parse_scene(std::string_view text, std::string name) {
  std::vector<Token> tokens = lex(text);
  if (tokens.size() == 1)  // only End
    throw ParseError(SourcePos{1, 1}, "empty scene");

  std::vector<std::string> variables;
  std::optional<std::size_t> target_rank, source_rank;
  std::optional<std::vector<std::vector<Parser::MatrixEntry>>> p_raw, a_raw;
  SourcePos p_pos{}, a_pos{};
  std::map<std::string, BundleForm> sections;
  std::map<std::string, VectorField> fields;

  Parser sc(std::move(tokens), {});
  sc.skip_newlines();
  while (!sc.at(Tok::End)) {
    Token head = sc.expect(Tok::Ident, "at the start of a scene line");
    const std::string& directive = head.text;
    auto require_header = [&] {
      if (variables.empty())
        throw ParseError(head.pos, "'" + directive + "' must come after 'vars'");
      if (!target_rank)
        throw ParseError(head.pos, "'" + directive + "' must come after 'rank'");
    };
    if (directive == "vars") {
      if (!variables.empty()) throw ParseError(head.pos, "duplicate 'vars' line");
      while (sc.at(Tok::Ident)) variables.push_back(sc.advance().text);
      if (variables.empty()) throw ParseError(head.pos, "'vars' needs at least one variable name");
      check_variable_names(variables, head.pos);
      sc.bind_vars(variables);
    } else if (directive == "rank") {
      if (target_rank) throw ParseError(head.pos, "duplicate 'rank' line");
      Token first = sc.expect(Tok::Int, "after 'rank'");
      long r1 = static_cast<long>(Parser::int_value(first));
      long r2 = r1;
      if (sc.at(Tok::Int)) r2 = static_cast<long>(Parser::int_value(sc.advance()));
      if (r1 < 1 || r2 < 1) throw ParseError(first.pos, "rank must be positive");
      target_rank = static_cast<std::size_t>(r1);
      source_rank = static_cast<std::size_t>(r2);
    } else if (directive == "P") {
      require_header();
      if (p_raw) throw ParseError(head.pos, "duplicate 'P' line");
      sc.expect(Tok::Equals, "after 'P'");
      p_pos = sc.peek().pos;
      p_raw = sc.parse_matrix();
    } else if (directive == "A") {
      require_header();
      if (a_raw) throw ParseError(head.pos, "duplicate 'A' line");
      sc.expect(Tok::Equals, "after 'A'");
      a_pos = sc.peek().pos;
      a_raw = sc.parse_matrix();
    } else if (directive == "section") {
      require_header();
      Token sname = sc.expect(Tok::Ident, "after 'section'");
      if (Parser::is_frame_name(sname.text))
        throw ParseError(sname.pos, "section name collides with frame syntax", sname.text);
      check_declared_name(sname.text, variables, sname.pos);
      if (sections.count(sname.text))
        throw ParseError(sname.pos, "duplicate section '" + sname.text + "'");
      sc.expect(Tok::Equals, "after the section name");
      Scene partial;
      partial.variables = variables;
      partial.sections = sections;
      partial.fields = fields;
      if (sc.at(Tok::LBracket))
        sections.emplace(sname.text, sc.parse_component_vector(*source_rank, 0));
      else
        sections.emplace(sname.text, sc.parse_section_expr(*source_rank, &partial));
    } else if (directive == "field") {
      require_header();
      Token fname = sc.expect(Tok::Ident, "after 'field'");
      check_declared_name(fname.text, variables, fname.pos);
      if (fname.text == "d")
        throw ParseError(fname.pos, "'d' is reserved for differentials", fname.text);
      if (fields.count(fname.text))
        throw ParseError(fname.pos, "duplicate field '" + fname.text + "'");
      sc.expect(Tok::Equals, "after the field name");
      Scene partial;
      partial.variables = variables;
      partial.sections = sections;
      partial.fields = fields;
      fields.emplace(fname.text, sc.parse_field_expr(&partial));
    } else {
      throw ParseError(head.pos, "unknown scene directive", directive);
    }
    if (!sc.at(Tok::End)) sc.expect(Tok::Newline, "after a scene line");
    sc.skip_newlines();
  }

  if (variables.empty()) throw ParseError(SourcePos{1, 1}, "scene is missing a 'vars' line");
  if (!target_rank) throw ParseError(SourcePos{1, 1}, "scene is missing a 'rank' line");
  if (!p_raw) throw ParseError(SourcePos{1, 1}, "scene is missing a 'P =' matrix");
  if (!a_raw) throw ParseError(SourcePos{1, 1}, "scene is missing an 'A =' matrix");

  const std::size_t rp = *target_rank, r = *source_rank, n = variables.size();

  auto shape_check = [&](const auto& rows, SourcePos pos, const char* what) {
    if (rows.size() != rp)
      throw ParseError(pos, std::string(what) + " must have " + std::to_string(rp) + " rows");
    for (const auto& row : rows)
      if (row.size() != r)
        throw ParseError(pos,
                         std::string(what) + " rows must have " + std::to_string(r) + " entries");
  };
  shape_check(*p_raw, p_pos, "P");
  shape_check(*a_raw, a_pos, "A");

  BundleHom principal(rp, r, n);
  for (std::size_t j = 0; j < rp; ++j)
    for (std::size_t i = 0; i < r; ++i)
      principal.set_entry(j, i, sc.to_polynomial((*p_raw)[j][i].value, (*p_raw)[j][i].pos));

  std::vector<std::vector<ScalarForm>> connection(rp, std::vector<ScalarForm>(r, ScalarForm(n, 1)));
  for (std::size_t j = 0; j < rp; ++j)
    for (std::size_t i = 0; i < r; ++i)
      connection[j][i] = sc.to_form((*a_raw)[j][i].value, 1, (*a_raw)[j][i].pos);

  return Scene{std::move(name), std::move(variables), rp, r, std::move(principal),
               std::move(connection), std::move(sections), std::move(fields)};
}

}  // namespace pseudoflat
