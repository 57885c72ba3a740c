// Copyright 2026 The hocu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hocu/dsl.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace hocu {

ParseError::ParseError(Kind kind, int line, int column,
                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + kind_name(kind) + " error: " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

const char* kind_name(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kLexical:
      return "lexical";
    case ParseError::Kind::kSyntax:
      return "syntax";
    case ParseError::Kind::kResolution:
      return "resolution";
    case ParseError::Kind::kTyping:
      return "typing";
  }
  return "?";
}

namespace {

enum class Tok {
  kIdent,
  kSemi,
  kComma,
  kColon,
  kAt,
  kLParen,
  kRParen,
  kBackslash,
  kDot,
  kEq,
  kArrow,
  kTilde,
  kAmp,
  kBar,
  kUnderscore,
  kLBrace,
  kRBrace,
  kAssign,
  kEntails,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
  bool spaced;  // whitespace or a comment precedes it
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  bool spaced = true;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      spaced = true;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      spaced = true;
      continue;
    }
    int l = line;
    int col = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), l, col,
                     spaced});
      advance(j - i);
      spaced = false;
      continue;
    }
    auto two = [&](char next) {
      return i + 1 < text.size() && text[i + 1] == next;
    };
    Tok kind;
    std::size_t width = 1;
    switch (c) {
      case ';': kind = Tok::kSemi; break;
      case ',': kind = Tok::kComma; break;
      case '@': kind = Tok::kAt; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '\\': kind = Tok::kBackslash; break;
      case '.': kind = Tok::kDot; break;
      case '=': kind = Tok::kEq; break;
      case '~': kind = Tok::kTilde; break;
      case '&': kind = Tok::kAmp; break;
      case '_': kind = Tok::kUnderscore; break;
      case '{': kind = Tok::kLBrace; break;
      case '}': kind = Tok::kRBrace; break;
      case ':':
        kind = two('=') ? Tok::kAssign : Tok::kColon;
        width = two('=') ? 2 : 1;
        break;
      case '|':
        kind = two('=') ? Tok::kEntails : Tok::kBar;
        width = two('=') ? 2 : 1;
        break;
      case '-':
        if (!two('>')) {
          throw ParseError(ParseError::Kind::kLexical, l, col,
                           "expected '->'");
        }
        kind = Tok::kArrow;
        width = 2;
        break;
      default:
        throw ParseError(ParseError::Kind::kLexical, l, col,
                         std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(text.substr(i, width)), l, col, spaced});
    advance(width);
    spaced = false;
  }
  out.push_back({Tok::kEnd, "", line, column, true});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kSemi: return "';'";
    case Tok::kComma: return "','";
    case Tok::kColon: return "':'";
    case Tok::kAt: return "'@'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kBackslash: return "'\\'";
    case Tok::kDot: return "'.'";
    case Tok::kEq: return "'='";
    case Tok::kArrow: return "'->'";
    case Tok::kTilde: return "'~'";
    case Tok::kAmp: return "'&'";
    case Tok::kBar: return "'|'";
    case Tok::kUnderscore: return "'_'";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kAssign: return "':='";
    case Tok::kEntails: return "'|='";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

// Terms are parsed to this untyped tree first; binder types may only be
// known once the expected type is.
struct Ast {
  enum class Kind { kSym, kApp, kLam } kind = Kind::kSym;
  std::string name;
  std::optional<Colour> colour;
  bool annotated = false;
  std::vector<Ast> children;
  std::string binder;
  std::optional<Type> binder_type;
  int line = 0;
  int column = 0;
};

class Parser {
 public:
  Parser(std::string_view text, Signature* sig)
      : tokens_(lex(text)), sig_(sig) {}

  ProblemFile file() {
    ProblemFile out;
    while (!at(Tok::kEnd)) {
      const Token& t = expect(Tok::kIdent, "a declaration keyword");
      if (t.text == "colours") {
        colours(t);
      } else if (t.text == "types") {
        do {
          const Token& name = expect(Tok::kIdent, "a type name");
          guard(name, [&] { sig_->add_base_type(name.text); });
        } while (accept(Tok::kComma));
        expect(Tok::kSemi, "';'");
      } else if (t.text == "const" || t.text == "var") {
        declaration(t.text == "const");
      } else if (t.text == "eq") {
        Ast lhs = term();
        expect(Tok::kEq, "'='");
        Ast rhs = term();
        expect(Tok::kSemi, "';'");
        auto [l, r] = elaborate_pair(lhs, rhs);
        out.problem.equations.push_back(TermEquation{l, r, false});
      } else if (t.text == "expect") {
        if (accept_word("none")) {
          expect(Tok::kSemi, "';'");
          if (!out.expected.empty()) {
            fail(ParseError::Kind::kSyntax, t, "'expect none' after solutions");
          }
          out.expect_none = true;
        } else {
          if (out.expect_none) {
            fail(ParseError::Kind::kSyntax, t, "solutions after 'expect none'");
          }
          expect(Tok::kLBrace, "'{'");
          out.expected.push_back(solution_body(Tok::kRBrace));
          expect(Tok::kRBrace, "'}'");
        }
      } else {
        fail(ParseError::Kind::kSyntax, t,
             "unknown declaration '" + t.text + "'");
      }
    }
    out.problem.signature = *sig_;
    return out;
  }

  Expected solution_body(Tok end) {
    Expected out;
    while (!at(end)) {
      binding(out);
      if (!accept(Tok::kSemi) && !at(end)) {
        expect(Tok::kSemi, "';'");
      }
    }
    return out;
  }

  Term lone_term(const std::optional<Type>& expected) {
    Ast ast = term();
    expect(Tok::kEnd, "end of input");
    return elaborate(ast, expected);
  }

  void finish() { expect(Tok::kEnd, "end of input"); }

 private:
  // Tokens.
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  bool at(Tok t) const { return peek().kind == t; }
  bool accept(Tok t) {
    if (!at(t)) return false;
    ++pos_;
    return true;
  }
  bool accept_word(const std::string& word) {
    if (!at(Tok::kIdent) || peek().text != word) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok t, const std::string& what) {
    if (!at(t)) {
      const Token& got = peek();
      std::string found =
          got.kind == Tok::kIdent ? "'" + got.text + "'" : describe(got.kind);
      fail(ParseError::Kind::kSyntax, got,
           "expected " + what + ", found " + found);
    }
    return tokens_[pos_++];
  }
  [[noreturn]] void fail(ParseError::Kind kind, const Token& at,
                         const std::string& message) const {
    throw ParseError(kind, at.line, at.column, message);
  }
  [[noreturn]] void fail(ParseError::Kind kind, const Ast& at,
                         const std::string& message) const {
    throw ParseError(kind, at.line, at.column, message);
  }
  template <typename F>
  void guard(const Token& at, F f) {
    try {
      f();
    } catch (const ColourError& e) {
      fail(ParseError::Kind::kResolution, at, e.what());
    } catch (const TypeError& e) {
      fail(ParseError::Kind::kResolution, at, e.what());
    }
  }

  // Declarations.
  void colours(const Token& keyword) {
    if (seen_colours_) {
      fail(ParseError::Kind::kSyntax, keyword, "colours declared twice");
    }
    seen_colours_ = true;
    std::vector<std::string> names;
    do {
      names.push_back(expect(Tok::kIdent, "a colour constant").text);
    } while (accept(Tok::kComma));
    expect(Tok::kSemi, "';'");
    guard(keyword, [&] { sig_->set_alphabet(ColourAlphabet(names)); });
  }

  void declaration(bool constant) {
    const Token& name = expect(Tok::kIdent, "a symbol name");
    expect(Tok::kColon, "':'");
    Type type = parse_type();
    std::optional<Colour> colour;
    if (accept(Tok::kAt)) colour = parse_colour();
    expect(Tok::kSemi, "';'");
    guard(name, [&] {
      SymbolDecl decl{name.text, type, colour};
      if (constant) {
        sig_->add_constant(std::move(decl));
      } else {
        sig_->add_variable(std::move(decl));
      }
    });
  }

  void binding(Expected& out) {
    if (at(Tok::kIdent) && peek(1).kind == Tok::kAssign) {
      const Token& var = tokens_[pos_++];
      ++pos_;
      if (!is_colour_variable_name(var.text)) {
        fail(ParseError::Kind::kResolution, var,
             "'" + var.text + "' is not a colour variable");
      }
      out.substitution.bind_colour(var.text, parse_colour());
      return;
    }
    if (at(Tok::kIdent) &&
        (peek(1).kind == Tok::kEq || peek(1).kind == Tok::kUnderscore)) {
      const Token& var = tokens_[pos_++];
      const SymbolDecl* decl = sig_->variable(var.text);
      if (decl == nullptr) {
        fail(ParseError::Kind::kResolution, var,
             "undeclared variable '" + var.text + "'");
      }
      std::optional<Colour> colour = decl->colour;
      if (accept(Tok::kUnderscore)) colour = annotation();
      expect(Tok::kEq, "'='");
      Ast image = term();
      out.substitution.bind(VarKey{var.text, colour},
                            elaborate(image, decl->type));
      return;
    }
    Colour lhs = parse_colour();
    expect(Tok::kEntails, "'|='");
    out.constraints.push_back({lhs, parse_colour()});
  }

  // Types.
  Type parse_type() {
    Type from = atomic_type();
    if (accept(Tok::kArrow)) return Type::arrow(from, parse_type());
    return from;
  }
  Type atomic_type() {
    if (accept(Tok::kLParen)) {
      Type t = parse_type();
      expect(Tok::kRParen, "')'");
      return t;
    }
    const Token& name = expect(Tok::kIdent, "a type");
    if (!sig_->has_base_type(name.text)) {
      fail(ParseError::Kind::kResolution, name,
           "undeclared type '" + name.text + "'");
    }
    return Type::base(name.text);
  }

  // Colours: `|` below `&` below `~`.
  Colour parse_colour() {
    Colour c = colour_conj();
    while (accept(Tok::kBar)) c = Colour::disj(c, colour_conj());
    return c;
  }
  Colour colour_conj() {
    Colour c = colour_unary();
    while (accept(Tok::kAmp)) c = Colour::conj(c, colour_unary());
    return c;
  }
  Colour colour_unary() {
    if (accept(Tok::kTilde)) return Colour::negate(colour_unary());
    return colour_atom();
  }
  Colour colour_atom() {
    if (accept(Tok::kLParen)) {
      Colour c = parse_colour();
      expect(Tok::kRParen, "')'");
      return c;
    }
    const Token& name = expect(Tok::kIdent, "a colour");
    if (sig_->alphabet().contains(name.text)) {
      return Colour::constant(name.text);
    }
    if (is_colour_variable_name(name.text)) return Colour::variable(name.text);
    fail(ParseError::Kind::kResolution, name,
         "undeclared colour '" + name.text + "'");
  }
  // The part after `_`: `pe`, `~pe`, `A`, `(pe | pf)`.
  Colour annotation() {
    if (accept(Tok::kTilde)) return Colour::negate(annotation());
    return colour_atom();
  }

  // Terms.
  Ast term() {
    if (at(Tok::kBackslash)) {
      const Token& slash = tokens_[pos_++];
      std::vector<std::pair<const Token*, std::optional<Type>>> binders;
      do {
        const Token& name = expect(Tok::kIdent, "a binder");
        std::optional<Type> type;
        if (accept(Tok::kColon)) type = atomic_type();
        binders.emplace_back(&name, type);
      } while (at(Tok::kIdent));
      expect(Tok::kDot, "'.'");
      Ast body = term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        Ast lam;
        lam.kind = Ast::Kind::kLam;
        lam.binder = it->first->text;
        lam.binder_type = it->second;
        lam.line = it->first->line;
        lam.column = it->first->column;
        lam.children.push_back(std::move(body));
        body = std::move(lam);
      }
      body.line = slash.line;
      body.column = slash.column;
      return body;
    }
    Ast head = atom();
    std::vector<Ast> args;
    while (at(Tok::kIdent) || at(Tok::kLParen) || at(Tok::kBackslash)) {
      if (at(Tok::kBackslash)) {
        args.push_back(term());
        break;
      }
      args.push_back(atom());
    }
    if (args.empty()) return head;
    Ast app;
    app.kind = Ast::Kind::kApp;
    app.line = head.line;
    app.column = head.column;
    app.children.push_back(std::move(head));
    for (Ast& a : args) app.children.push_back(std::move(a));
    return app;
  }

  Ast atom() {
    Ast out;
    if (at(Tok::kLParen)) {
      ++pos_;
      out = term();
      expect(Tok::kRParen, "')'");
    } else {
      const Token& name = expect(Tok::kIdent, "a term");
      out.kind = Ast::Kind::kSym;
      out.name = name.text;
      out.line = name.line;
      out.column = name.column;
      if (accept(Tok::kUnderscore)) {
        out.colour = annotation();
        out.annotated = true;
      }
    }
    // f(a, b): the parenthesis must touch the head.
    if (at(Tok::kLParen) && !peek().spaced) {
      ++pos_;
      Ast app;
    app.kind = Ast::Kind::kApp;
      app.line = out.line;
      app.column = out.column;
      app.children.push_back(std::move(out));
      do {
        app.children.push_back(term());
      } while (accept(Tok::kComma));
      expect(Tok::kRParen, "')'");
      return app;
    }
    return out;
  }

  // Elaboration.
  static bool needs_expected(const Ast& ast) {
    return ast.kind == Ast::Kind::kLam &&
           (!ast.binder_type || needs_expected(ast.children[0]));
  }

  std::pair<Term, Term> elaborate_pair(const Ast& lhs, const Ast& rhs) {
    if (needs_expected(lhs) && !needs_expected(rhs)) {
      Term r = elaborate(rhs, std::nullopt);
      return {elaborate(lhs, r.type()), r};
    }
    Term l = elaborate(lhs, std::nullopt);
    return {l, elaborate(rhs, l.type())};
  }

  Term elaborate(const Ast& ast, const std::optional<Type>& expected) {
    Term t = build(ast, expected);
    if (expected && t.type() != *expected) {
      fail(ParseError::Kind::kTyping, ast,
           "expected type " + expected->str() + ", found " + t.type().str());
    }
    return t;
  }

  Term build(const Ast& ast, const std::optional<Type>& expected) {
    switch (ast.kind) {
      case Ast::Kind::kSym:
        return symbol(ast);
      case Ast::Kind::kApp: {
        Term f = build(ast.children[0], std::nullopt);
        for (std::size_t i = 1; i < ast.children.size(); ++i) {
          if (f.type().is_base()) {
            fail(ParseError::Kind::kTyping, ast.children[i],
                 "too many arguments for a term of type " + f.type().str());
          }
          Term a = elaborate(ast.children[i], f.type().from());
          f = Term::app(f, a);
        }
        return f;
      }
      case Ast::Kind::kLam: {
        std::optional<Type> binder = ast.binder_type;
        std::optional<Type> body_expected;
        if (expected) {
          if (expected->is_base()) {
            fail(ParseError::Kind::kTyping, ast,
                 "lambda where a term of type " + expected->str() +
                     " is expected");
          }
          if (binder && *binder != expected->from()) {
            fail(ParseError::Kind::kTyping, ast,
                 "binder '" + ast.binder + "' has type " + binder->str() +
                     ", expected " + expected->from().str());
          }
          binder = expected->from();
          body_expected = expected->to();
        }
        if (!binder) {
          fail(ParseError::Kind::kTyping, ast,
               "cannot infer the type of binder '" + ast.binder + "'");
        }
        context_.emplace_back(ast.binder, *binder);
        Term body = elaborate(ast.children[0], body_expected);
        context_.pop_back();
        return Term::lam(ast.binder, *binder, body);
      }
    }
    fail(ParseError::Kind::kSyntax, ast, "bad term");
  }

  Term symbol(const Ast& ast) {
    for (std::size_t k = context_.size(); k-- > 0;) {
      if (context_[k].first != ast.name) continue;
      if (ast.annotated) {
        fail(ParseError::Kind::kSyntax, ast,
             "bound variable '" + ast.name + "' cannot carry a colour");
      }
      return Term::bound(static_cast<int>(context_.size() - 1 - k),
                         context_[k].second);
    }
    if (const SymbolDecl* d = sig_->constant(ast.name)) {
      return Term::constant(ast.name, d->type,
                            ast.annotated ? ast.colour : d->colour);
    }
    if (const SymbolDecl* d = sig_->variable(ast.name)) {
      return Term::free(ast.name, d->type,
                        ast.annotated ? ast.colour : d->colour);
    }
    fail(ParseError::Kind::kResolution, ast,
         "undeclared symbol '" + ast.name + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Signature* sig_;
  bool seen_colours_ = false;
  std::vector<std::pair<std::string, Type>> context_;
};

}  // namespace

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.problem.signature == b.problem.signature &&
         a.problem.equations == b.problem.equations &&
         a.expected == b.expected && a.expect_none == b.expect_none;
}

ProblemFile parse_problem(std::string_view text) {
  Signature sig;
  return Parser(text, &sig).file();
}

ProblemFile read_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

Term parse_term(std::string_view text, const Signature& sig,
                const std::optional<Type>& expected) {
  Signature copy = sig;
  return Parser(text, &copy).lone_term(expected);
}

Expected parse_solution(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  Parser parser(text, &copy);
  Expected out = parser.solution_body(Tok::kEnd);
  parser.finish();
  return out;
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

void print_decl(std::string& out, const char* keyword, const SymbolDecl& d) {
  out += std::string(keyword) + " " + d.name + " : " + d.type.str();
  if (d.colour) out += " @ " + d.colour->str();
  out += ";\n";
}

}  // namespace

std::string print_problem(const ProblemFile& file) {
  const Signature& sig = file.problem.signature;
  PrintOptions options{true, &sig};
  std::string out;
  if (sig.alphabet().size() > 0) {
    out += "colours " + join(sig.alphabet().constants()) + ";\n";
  }
  if (!sig.base_types().empty()) {
    out += "types " + join(sig.base_types()) + ";\n";
  }
  for (const SymbolDecl& d : sig.constants()) print_decl(out, "const", d);
  for (const SymbolDecl& d : sig.variables()) print_decl(out, "var", d);
  for (const TermEquation& eq : file.problem.equations) {
    out += "eq " + to_string(eq.lhs, options) + " = " +
           to_string(eq.rhs, options) + ";\n";
  }
  if (file.expect_none) out += "expect none;\n";
  for (const Expected& e : file.expected) {
    out += "expect {";
    for (const auto& [key, image] : e.substitution.terms()) {
      out += " " + key.str() + " = " + to_string(image, options) + ";";
    }
    for (const auto& [var, value] : e.substitution.colours()) {
      out += " " + var + " := " + value.str() + ";";
    }
    for (const Entailment& c : e.constraints) {
      out += " " + c.annotation.str() + " |= " + c.bound.str() + ";";
    }
    out += " }\n";
  }
  return out;
}

}  // namespace hocu
