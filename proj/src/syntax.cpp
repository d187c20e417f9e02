#include "elx/syntax.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "elx/sugar.hpp"

namespace elx {

ParseError::ParseError(SourceSpan span, const std::string& message)
    : Error("line " + std::to_string(span.line) + ", column " + std::to_string(span.column) + ": " + message),
      span_(span),
      message_(message) {}

namespace {

enum class Tok { Ident, Var, LParen, RParen, Dot, Colon, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
};

bool is_keyword(std::string_view s) {
  return s == "Top" || s == "and" || s == "exists" || s == "SubClassOf" || s == "Self" || s == "o" ||
         s == "subRoleOf";
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of line";
    case Tok::Var:
      return "variable '?" + t.text + "'";
    case Tok::Ident:
      return (is_keyword(t.text) ? "keyword '" : "'") + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  return line;
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')' || c == '.' || c == ':' || c == ',') {
      const Tok kind = c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : c == '.' ? Tok::Dot : c == ':' ? Tok::Colon : Tok::Comma;
      out.push_back({kind, std::string(1, c), col});
      ++i;
    } else if (c == '?') {
      std::size_t j = i + 1;
      if (j >= line.size() || !(ident_start(line[j]) || line[j] == '_')) {
        throw ParseError({line_no, col, 1}, "expected a variable name after '?'");
      }
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Var, std::string(line.substr(i + 1, j - i - 1)), col});
      i = j;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      throw ParseError({line_no, col, 1}, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

enum class NameKind { Concept, Role };

// Tracks which namespace each identifier belongs to across a whole input.
class NameRegistry {
 public:
  explicit NameRegistry(const Signature* context) {
    if (context == nullptr) return;
    for (const auto& n : context->concepts) kinds_.emplace(n, NameKind::Concept);
    for (const auto& n : context->roles) kinds_.emplace(n, NameKind::Role);
  }

  void use(const Token& t, NameKind kind, int line_no) {
    auto [it, inserted] = kinds_.emplace(t.text, kind);
    if (!inserted && it->second != kind) {
      const SourceSpan span{line_no, t.column, static_cast<int>(t.text.size())};
      if (kind == NameKind::Concept) throw ParseError(span, "'" + t.text + "' is a role and cannot be used as a concept");
      throw ParseError(span, "'" + t.text + "' is a concept name and cannot be used as a role");
    }
  }

 private:
  std::map<std::string, NameKind> kinds_;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_no, NameRegistry& names)
      : toks_(std::move(tokens)), line_(line_no), names_(names) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_keyword(std::string_view kw, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == kw;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError({line_, t.column, std::max<int>(1, static_cast<int>(t.text.size()) + (t.kind == Tok::Var ? 1 : 0))}, msg);
  }
  [[noreturn]] void expected(const std::string& what) const { fail(peek(), "expected " + what + ", found " + describe(peek())); }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) expected(what);
    ++pos_;
  }
  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) expected("'" + std::string(kw) + "'");
    ++pos_;
  }
  void expect_end() {
    if (!at_end()) expected("end of line");
  }

  std::string role() {
    const Token& t = peek();
    if (t.kind == Tok::Var) fail(t, "variable '?" + t.text + "' cannot be used as a role");
    if (t.kind != Tok::Ident) expected("a role name");
    if (is_keyword(t.text)) fail(t, "keyword '" + t.text + "' cannot be used as a role");
    names_.use(t, NameKind::Role, line_);
    ++pos_;
    return t.text;
  }

  Concept concept_expr() {
    std::vector<Concept> parts{primary()};
    while (at_keyword("and")) {
      ++pos_;
      parts.push_back(primary());
    }
    return parts.size() == 1 ? parts.front() : Concept::raw_conj(std::move(parts));
  }

  Concept primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Var:
        ++pos_;
        return Concept::var(t.text);
      case Tok::LParen: {
        ++pos_;
        Concept c = concept_expr();
        expect(Tok::RParen, "')'");
        return c;
      }
      case Tok::Ident:
        if (t.text == "Top") {
          ++pos_;
          return Concept::top();
        }
        if (t.text == "exists") {
          ++pos_;
          std::string r = role();
          expect(Tok::Dot, "'.' after the role");
          if (at_keyword("Self")) fail(peek(), "'Self' is only allowed as a whole right-hand side 'exists r.Self'");
          return Concept::exists(std::move(r), primary());
        }
        if (is_keyword(t.text)) fail(t, "expected a concept, found keyword '" + t.text + "'");
        names_.use(t, NameKind::Concept, line_);
        ++pos_;
        return Concept::atom(t.text);
      default:
        expected("a concept");
    }
  }

  bool at_chain_sugar() const { return at_keyword("chain") && peek(1).kind == Tok::Colon; }

  std::vector<std::string> role_chain() {
    std::vector<std::string> roles{role()};
    while (at_keyword("o")) {
      ++pos_;
      roles.push_back(role());
    }
    return roles;
  }

  // Returns either a plain axiom or a sugar form.
  std::variant<Axiom, SugarAxiom> line(bool allow_sugar) {
    if (allow_sugar && at_chain_sugar()) {
      pos_ += 2;
      RoleChain chain;
      chain.lhs = role_chain();
      expect_keyword("SubClassOf");
      chain.rhs = role_chain();
      expect_end();
      return SugarAxiom{std::move(chain)};
    }
    Concept lhs = concept_expr();
    expect_keyword("SubClassOf");
    if (allow_sugar && at_keyword("exists") && peek(2).kind == Tok::Dot && at_keyword("Self", 3)) {
      ++pos_;
      std::string r = role();
      pos_ += 2;
      expect_end();
      return SugarAxiom{SelfRestriction{normalize(lhs), std::move(r)}};
    }
    if (allow_sugar && peek().kind == Tok::LParen && peek(1).kind == Tok::Ident && at_keyword("subRoleOf", 2)) {
      ++pos_;
      std::string sub = role();
      ++pos_;
      std::string super = role();
      expect(Tok::RParen, "')'");
      expect_end();
      return SugarAxiom{LocalRoleValueMap{normalize(lhs), std::move(sub), std::move(super)}};
    }
    Concept rhs = concept_expr();
    expect_end();
    return Axiom{normalize(lhs), normalize(rhs)};
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
  NameRegistry& names_;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

void print_to(const Concept& c, std::string& out);

void print_operand(const Concept& c, std::string& out) {
  if (c.is_conj()) {
    out += '(';
    print_to(c, out);
    out += ')';
  } else {
    print_to(c, out);
  }
}

void print_to(const Concept& c, std::string& out) {
  switch (c.kind()) {
    case ConceptKind::Top:
      out += "Top";
      break;
    case ConceptKind::Atom:
      out += c.name();
      break;
    case ConceptKind::Var:
      out += '?';
      out += c.name();
      break;
    case ConceptKind::Exists:
      out += "exists ";
      out += c.role();
      out += '.';
      print_operand(c.filler(), out);
      break;
    case ConceptKind::Conj: {
      bool first = true;
      for (const auto& p : c.conjuncts()) {
        if (!first) out += " and ";
        print_operand(p, out);
        first = false;
      }
      break;
    }
  }
}

}  // namespace

ParsedOntology parse_ontology(std::string_view text) {
  ParsedOntology out;
  NameRegistry names(nullptr);
  int fresh = 0;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const auto body = strip_comment(lines[i]);
    auto toks = tokenize(body, line_no);
    if (toks.front().kind == Tok::End) continue;
    const int first_col = toks.front().column;
    const SourceSpan span{line_no, first_col, static_cast<int>(body.size()) - first_col + 1};
    LineParser parser(std::move(toks), line_no, names);
    auto parsed = parser.line(true);
    Axiom axiom;
    if (auto* plain = std::get_if<Axiom>(&parsed)) {
      axiom = *plain;
    } else {
      try {
        axiom = desugar(std::get<SugarAxiom>(parsed), "__v" + std::to_string(fresh++));
      } catch (const SugarError& e) {
        throw ParseError(span, e.what());
      }
    }
    if (out.ontology.add(axiom)) out.spans.push_back(span);
  }
  return out;
}

namespace {

template <typename F>
auto parse_single_line(std::string_view text, F&& body) {
  const auto stripped = strip_comment(text);
  if (stripped.find('\n') != std::string_view::npos) {
    throw ParseError({1, 1, static_cast<int>(stripped.size())}, "expected a single line");
  }
  return body(tokenize(stripped, 1));
}

}  // namespace

Concept parse_concept(std::string_view text, const Signature* context) {
  NameRegistry names(context);
  return parse_single_line(text, [&](std::vector<Token> toks) {
    LineParser p(std::move(toks), 1, names);
    Concept c = p.concept_expr();
    p.expect_end();
    return normalize(c);
  });
}

Axiom parse_axiom(std::string_view text, const Signature* context) {
  NameRegistry names(context);
  return parse_single_line(text, [&](std::vector<Token> toks) {
    LineParser p(std::move(toks), 1, names);
    return std::get<Axiom>(p.line(false));
  });
}

ConceptSet parse_concept_base(std::string_view text, const Signature* context) {
  NameRegistry names(context);
  ConceptSet out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    auto toks = tokenize(strip_comment(lines[i]), line_no);
    if (toks.front().kind == Tok::End) continue;
    LineParser p(std::move(toks), line_no, names);
    Concept c = p.concept_expr();
    p.expect_end();
    out.insert(normalize(c));
  }
  return out;
}

std::string print_concept(const Concept& c) {
  std::string out;
  print_to(c, out);
  return out;
}

std::string print_axiom(const Axiom& a) { return print_concept(a.lhs) + " SubClassOf " + print_concept(a.rhs); }

std::string print_ontology(const Ontology& kb) {
  std::string out;
  for (const auto& a : kb) out += print_axiom(a) + "\n";
  return out;
}

std::string print_concept_set(const ConceptSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : set) {
    if (!first) out += ", ";
    out += print_concept(c);
    first = false;
  }
  return out + "}";
}

// --- interpretations -------------------------------------------------------

namespace {

bool element_char(char c) { return ident_char(c); }

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  int line;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& msg, int length = 1) const {
    throw ParseError({line, static_cast<int>(i) + 1, length}, msg);
  }
  std::pair<std::string, int> word() {
    skip_ws();
    const std::size_t start = i;
    while (i < s.size() && element_char(s[i])) ++i;
    if (i == start) fail(i < s.size() ? std::string("unexpected character '") + s[i] + "'" : "unexpected end of line");
    return {std::string(s.substr(start, i - start)), static_cast<int>(start) + 1};
  }
  void expect(char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
};

}  // namespace

FiniteInterpretation parse_interpretation(std::string_view text) {
  std::optional<FiniteInterpretation> interp;
  std::map<std::string, bool> is_role;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    Cursor cur{strip_comment(lines[li]), 0, line_no};
    if (cur.done()) continue;
    auto [name, name_col] = cur.word();
    const SourceSpan name_span{line_no, name_col, static_cast<int>(name.size())};
    cur.expect(':');
    if (!interp) {
      if (name != "domain") throw ParseError(name_span, "the first line must be 'domain: …'");
      std::vector<std::string> elems;
      while (!cur.done()) elems.push_back(cur.word().first);
      if (elems.empty()) throw ParseError(name_span, "the domain must not be empty");
      try {
        interp.emplace(std::move(elems));
      } catch (const Error& e) {
        throw ParseError(name_span, e.what());
      }
      continue;
    }
    if (name == "domain") throw ParseError(name_span, "duplicate domain line");
    if (!ident_start(name.front()) || is_keyword(name)) throw ParseError(name_span, "invalid name '" + name + "'");
    cur.skip_ws();
    const bool role_line = cur.i < cur.s.size() && cur.s[cur.i] == '(';
    auto [it, inserted] = is_role.emplace(name, role_line);
    if (!inserted && it->second != role_line) {
      throw ParseError(name_span, "'" + name + "' is used both as a concept name and as a role");
    }
    auto lookup = [&](const std::string& e, int col) {
      auto idx = interp->element_index(e);
      if (!idx) throw ParseError({line_no, col, static_cast<int>(e.size())}, "element '" + e + "' is not in the domain");
      return *idx;
    };
    if (role_line) {
      interp->role_extension_mut(name);
      while (!cur.done()) {
        cur.expect('(');
        auto [from, fc] = cur.word();
        cur.expect(',');
        auto [to, tc] = cur.word();
        cur.expect(')');
        interp->add_role_pair(name, lookup(from, fc), lookup(to, tc));
      }
    } else {
      interp->concept_extension_mut(name);
      while (!cur.done()) {
        auto [e, col] = cur.word();
        interp->add_concept_member(name, lookup(e, col));
      }
    }
  }
  if (!interp) throw ParseError({1, 1, 0}, "missing 'domain:' line");
  return std::move(*interp);
}

std::string print_interpretation(const FiniteInterpretation& interp) {
  std::string out = "domain:";
  for (const auto& e : interp.domain()) out += " " + e;
  out += "\n";
  for (const auto& name : interp.concept_names()) {
    out += name + ":";
    for (auto e : interp.concept_extension(name).elements()) out += " " + interp.element(e);
    out += "\n";
  }
  for (const auto& role : interp.role_names()) {
    const auto pairs = interp.role_pairs(role);
    // An empty role line would read back as a concept name.
    if (pairs.empty()) continue;
    out += role + ":";
    for (auto [d, e] : pairs) out += " (" + interp.element(d) + "," + interp.element(e) + ")";
    out += "\n";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Concept& c) { return os << print_concept(c); }
std::ostream& operator<<(std::ostream& os, const Axiom& a) { return os << print_axiom(a); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace elx
