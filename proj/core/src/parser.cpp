#include "mvlaw/parser.hpp"

#include <cctype>
#include <cstdlib>

#include "mvlaw/error.hpp"

namespace mvlaw {
namespace {

struct Token {
  enum class Kind { Ident, Number, LParen, RParen, Comma, Dot, Amp, Pipe, Arrow, Tilde, Hash, End };
  Kind kind;
  std::string text;  // Ident/Number: the lexeme; Hash: the label
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error("syntax error at position " + std::to_string(tok_.pos) + ": " + msg);
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text.clear();
      return;
    }
    char c = text_[i_];
    auto single = [&](Token::Kind k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      ++i_;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
        ++j;
      tok_.kind = Token::Kind::Ident;
      tok_.text = text_.substr(i_, j - i_);
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      tok_.kind = Token::Kind::Number;
      tok_.text = text_.substr(i_, j - i_);
      i_ = j;
      return;
    }
    switch (c) {
      case '(': single(Token::Kind::LParen); return;
      case ')': single(Token::Kind::RParen); return;
      case ',': single(Token::Kind::Comma); return;
      case '.': single(Token::Kind::Dot); return;
      case '&': single(Token::Kind::Amp); return;
      case '|': single(Token::Kind::Pipe); return;
      case '~': single(Token::Kind::Tilde); return;
      case '-':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
          tok_.kind = Token::Kind::Arrow;
          tok_.text = "->";
          i_ += 2;
          return;
        }
        break;
      case '#': {
        // label: either balanced parentheses (product elements) or a run of
        // label characters, which may include '/' for rationals
        ++i_;
        std::size_t j = i_;
        if (j < text_.size() && text_[j] == '(') {
          int depth = 0;
          while (j < text_.size()) {
            if (text_[j] == '(') ++depth;
            if (text_[j] == ')' && --depth == 0) {
              ++j;
              break;
            }
            ++j;
          }
        } else {
          while (j < text_.size() &&
                 (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_' ||
                  text_[j] == '/' || text_[j] == '.' || text_[j] == '-'))
            ++j;
        }
        if (j == i_) throw input_error("syntax error at position " + std::to_string(i_) +
                                       ": expected label after '#'");
        tok_.kind = Token::Kind::Hash;
        tok_.text = text_.substr(i_, j - i_);
        i_ = j;
        return;
      }
      default:
        break;
    }
    throw input_error("syntax error at position " + std::to_string(i_) +
                      ": unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token tok_;
};

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "not" || s == "pow" || s == "times" ||
         s == "box" || s == "dia";
}

// ---------------------------------------------------------------------------
// Formula parser

class FormulaParser {
 public:
  FormulaParser(const std::string& text, const Vocabulary& vocab, const LatticeAlgebra& algebra)
      : lex_(text), vocab_(vocab), algebra_(algebra) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input");
    return f;
  }

 private:
  FormulaPtr formula() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Ident && (t.text == "forall" || t.text == "exists")) {
      bool universal = t.text == "forall";
      lex_.take();
      Token var = lex_.take();
      if (var.kind != Token::Kind::Ident || is_keyword(var.text))
        lex_.fail("expected variable after quantifier");
      if (lex_.take().kind != Token::Kind::Dot) lex_.fail("expected '.' after quantified variable");
      return Formula::quant(universal, var.text, formula());
    }
    return implication();
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (lex_.peek().kind == Token::Kind::Arrow) {
      lex_.take();
      require_op("imp");
      return Formula::connective("imp", {lhs, implication()});  // right associative
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (lex_.peek().kind == Token::Kind::Pipe) {
      lex_.take();
      f = Formula::connective("or", {f, conjunction()});
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (lex_.peek().kind == Token::Kind::Amp) {
      lex_.take();
      f = Formula::connective("and", {f, unary()});
    }
    return f;
  }

  FormulaPtr unary() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Ident && t.text == "not") {
      lex_.take();
      require_op("not");
      return Formula::connective("not", {unary()});
    }
    return primary();
  }

  FormulaPtr primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::LParen: {
        FormulaPtr f = formula();
        expect(Token::Kind::RParen, "expected ')'");
        return f;
      }
      case Token::Kind::Hash: {
        if (!algebra_.find_elem(t.text))
          fail_at(t, "constant label not in algebra carrier: " + t.text);
        return Formula::constant(t.text);
      }
      case Token::Kind::Ident: {
        if (t.text == "pow" || t.text == "times") return chang(t);
        if (lex_.peek().kind == Token::Kind::LParen) return call_or_atom(t);
        // bare identifier: must be the left side of a crisp identity
        if (lex_.peek().kind == Token::Kind::Tilde) {
          lex_.take();
          Token rhs = lex_.take();
          if (rhs.kind != Token::Kind::Ident) lex_.fail("expected variable after '~'");
          if (!vocab_.has_crisp_identity)
            fail_at(t, "crisp identity '~' is not in the vocabulary");
          return Formula::ident(t.text, rhs.text);
        }
        fail_at(t, "unknown symbol: " + t.text);
      }
      default:
        fail_at(t, "expected a formula");
    }
  }

  // pow(f,n) and times(n,f) expand to iterated odot / oplus.
  FormulaPtr chang(const Token& head) {
    bool is_pow = head.text == "pow";
    require_op(is_pow ? "odot" : "oplus");
    expect(Token::Kind::LParen, "expected '('");
    FormulaPtr f;
    long n = 0;
    if (is_pow) {
      f = formula();
      expect(Token::Kind::Comma, "expected ','");
      n = number();
    } else {
      n = number();
      expect(Token::Kind::Comma, "expected ','");
      f = formula();
    }
    expect(Token::Kind::RParen, "expected ')'");
    if (n < 1) fail_at(head, head.text + " requires a positive count");
    FormulaPtr acc = f;
    for (long i = 1; i < n; ++i) acc = Formula::connective(is_pow ? "odot" : "oplus", {acc, f});
    return acc;
  }

  FormulaPtr call_or_atom(const Token& head) {
    if (const RelationSymbol* rel = vocab_.find(head.text)) {
      expect(Token::Kind::LParen, "expected '('");
      std::vector<std::string> vars;
      for (;;) {
        Token v = lex_.take();
        if (v.kind != Token::Kind::Ident || is_keyword(v.text))
          lex_.fail("expected variable in atom arguments");
        vars.push_back(v.text);
        Token sep = lex_.take();
        if (sep.kind == Token::Kind::RParen) break;
        if (sep.kind != Token::Kind::Comma) lex_.fail("expected ',' or ')' in atom");
      }
      if (static_cast<int>(vars.size()) != rel->arity)
        fail_at(head, "arity mismatch: " + head.text + " expects " +
                          std::to_string(rel->arity) + " arguments, got " +
                          std::to_string(vars.size()));
      return Formula::atom(head.text, std::move(vars));
    }
    if (algebra_.has_op(head.text)) {
      const Operation& op = algebra_.op(head.text);
      expect(Token::Kind::LParen, "expected '('");
      std::vector<FormulaPtr> args;
      for (;;) {
        args.push_back(formula());
        Token sep = lex_.take();
        if (sep.kind == Token::Kind::RParen) break;
        if (sep.kind != Token::Kind::Comma) lex_.fail("expected ',' or ')' in connective call");
      }
      if (static_cast<int>(args.size()) != op.arity)
        fail_at(head, "arity mismatch: connective " + head.text + " expects " +
                          std::to_string(op.arity) + " arguments, got " +
                          std::to_string(args.size()));
      return Formula::connective(head.text, std::move(args));
    }
    fail_at(head, "unknown symbol: " + head.text);
  }

  long number() {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Number) lex_.fail("expected an integer");
    return std::strtol(t.text.c_str(), nullptr, 10);
  }

  void expect(Token::Kind k, const char* msg) {
    if (lex_.take().kind != k) lex_.fail(msg);
  }

  void require_op(const char* name) {
    if (!algebra_.has_op(name))
      lex_.fail(std::string("connective '") + name + "' is not in the algebra signature");
  }

  [[noreturn]] void fail_at(const Token& t, const std::string& msg) {
    throw input_error("error at position " + std::to_string(t.pos) + ": " + msg);
  }

  Lexer lex_;
  const Vocabulary& vocab_;
  const LatticeAlgebra& algebra_;
};

// ---------------------------------------------------------------------------
// Term parser: same operator grammar, leaves are variables.

class TermParser {
 public:
  TermParser(const std::string& text, const LatticeAlgebra& algebra)
      : lex_(text), algebra_(algebra) {}

  TermPtr parse() {
    TermPtr t = term();
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input");
    return t;
  }

 private:
  TermPtr term() {
    TermPtr lhs = disjunction();
    if (lex_.peek().kind == Token::Kind::Arrow) {
      lex_.take();
      require_op("imp");
      return Term::make_app("imp", {lhs, term()});
    }
    return lhs;
  }

  TermPtr disjunction() {
    TermPtr t = conjunction();
    while (lex_.peek().kind == Token::Kind::Pipe) {
      lex_.take();
      t = Term::make_app("or", {t, conjunction()});
    }
    return t;
  }

  TermPtr conjunction() {
    TermPtr t = unary();
    while (lex_.peek().kind == Token::Kind::Amp) {
      lex_.take();
      t = Term::make_app("and", {t, unary()});
    }
    return t;
  }

  TermPtr unary() {
    if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "not") {
      lex_.take();
      require_op("not");
      return Term::make_app("not", {unary()});
    }
    return primary();
  }

  TermPtr primary() {
    Token t = lex_.take();
    if (t.kind == Token::Kind::LParen) {
      TermPtr inner = term();
      if (lex_.take().kind != Token::Kind::RParen) lex_.fail("expected ')'");
      return inner;
    }
    if (t.kind != Token::Kind::Ident) lex_.fail("expected a term");
    if (t.text == "pow" || t.text == "times") {
      bool is_pow = t.text == "pow";
      require_op(is_pow ? "odot" : "oplus");
      if (lex_.take().kind != Token::Kind::LParen) lex_.fail("expected '('");
      TermPtr inner;
      long n = 0;
      if (is_pow) {
        inner = term();
        if (lex_.take().kind != Token::Kind::Comma) lex_.fail("expected ','");
        n = number();
      } else {
        n = number();
        if (lex_.take().kind != Token::Kind::Comma) lex_.fail("expected ','");
        inner = term();
      }
      if (lex_.take().kind != Token::Kind::RParen) lex_.fail("expected ')'");
      if (n < 1) lex_.fail("iteration requires a positive count");
      TermPtr acc = inner;
      for (long i = 1; i < n; ++i)
        acc = Term::make_app(is_pow ? "odot" : "oplus", {acc, inner});
      return acc;
    }
    if (algebra_.has_op(t.text) && lex_.peek().kind == Token::Kind::LParen) {
      const Operation& op = algebra_.op(t.text);
      lex_.take();
      std::vector<TermPtr> args;
      for (;;) {
        args.push_back(term());
        Token sep = lex_.take();
        if (sep.kind == Token::Kind::RParen) break;
        if (sep.kind != Token::Kind::Comma) lex_.fail("expected ',' or ')'");
      }
      if (static_cast<int>(args.size()) != op.arity) lex_.fail("arity mismatch at " + t.text);
      return Term::make_app(t.text, std::move(args));
    }
    if (is_keyword(t.text)) lex_.fail("unexpected keyword " + t.text);
    return Term::make_var(t.text);
  }

  long number() {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Number) lex_.fail("expected an integer");
    return std::strtol(t.text.c_str(), nullptr, 10);
  }

  void require_op(const char* name) {
    if (!algebra_.has_op(name))
      lex_.fail(std::string("connective '") + name + "' is not in the algebra signature");
  }

  Lexer lex_;
  const LatticeAlgebra& algebra_;
};

// ---------------------------------------------------------------------------
// Modal parser

class ModalParser {
 public:
  ModalParser(const std::string& text, const LatticeAlgebra& algebra)
      : lex_(text), algebra_(algebra) {}

  ModalPtr parse() {
    ModalPtr m = formula();
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input");
    return m;
  }

 private:
  ModalPtr formula() {
    ModalPtr lhs = disjunction();
    if (lex_.peek().kind == Token::Kind::Arrow) {
      lex_.take();
      return ModalFormula::connective("imp", {lhs, formula()});
    }
    return lhs;
  }

  ModalPtr disjunction() {
    ModalPtr m = conjunction();
    while (lex_.peek().kind == Token::Kind::Pipe) {
      lex_.take();
      m = ModalFormula::connective("or", {m, conjunction()});
    }
    return m;
  }

  ModalPtr conjunction() {
    ModalPtr m = unary();
    while (lex_.peek().kind == Token::Kind::Amp) {
      lex_.take();
      m = ModalFormula::connective("and", {m, unary()});
    }
    return m;
  }

  ModalPtr unary() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "not") {
        lex_.take();
        return ModalFormula::connective("not", {unary()});
      }
      if (t.text == "box") {
        lex_.take();
        return ModalFormula::box(unary());
      }
      if (t.text == "dia") {
        lex_.take();
        return ModalFormula::diamond(unary());
      }
    }
    return primary();
  }

  ModalPtr primary() {
    Token t = lex_.take();
    if (t.kind == Token::Kind::LParen) {
      ModalPtr m = formula();
      if (lex_.take().kind != Token::Kind::RParen) lex_.fail("expected ')'");
      return m;
    }
    if (t.kind != Token::Kind::Ident) lex_.fail("expected a modal formula");
    if (algebra_.has_op(t.text) && lex_.peek().kind == Token::Kind::LParen) {
      const Operation& op = algebra_.op(t.text);
      lex_.take();
      std::vector<ModalPtr> args;
      for (;;) {
        args.push_back(formula());
        Token sep = lex_.take();
        if (sep.kind == Token::Kind::RParen) break;
        if (sep.kind != Token::Kind::Comma) lex_.fail("expected ',' or ')'");
      }
      if (static_cast<int>(args.size()) != op.arity) lex_.fail("arity mismatch at " + t.text);
      return ModalFormula::connective(t.text, std::move(args));
    }
    if (is_keyword(t.text)) lex_.fail("unexpected keyword " + t.text);
    return ModalFormula::prop_letter(t.text);
  }

  Lexer lex_;
  const LatticeAlgebra& algebra_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Vocabulary& vocab,
                         const LatticeAlgebra& algebra, bool require_sentence) {
  vocab.validate();
  FormulaPtr f = FormulaParser(text, vocab, algebra).parse();
  if (require_sentence) {
    auto free = free_variables(*f);
    if (!free.empty()) throw input_error("free variable " + free.front() + " in sentence");
  }
  return f;
}

TermPtr parse_term(const std::string& text, const LatticeAlgebra& algebra) {
  return TermParser(text, algebra).parse();
}

ModalPtr parse_modal(const std::string& text, const LatticeAlgebra& algebra) {
  return ModalParser(text, algebra).parse();
}

Vocabulary infer_vocabulary(const std::string& text, const LatticeAlgebra& algebra) {
  Vocabulary v;
  Lexer lex(text);
  std::string prev_ident;
  for (;;) {
    Token t = lex.take();
    if (t.kind == Token::Kind::End) break;
    if (t.kind == Token::Kind::Tilde) v.has_crisp_identity = true;
    if (t.kind == Token::Kind::LParen && !prev_ident.empty() && !is_keyword(prev_ident) &&
        !algebra.has_op(prev_ident)) {
      // count plain-identifier arguments up to the matching ')'
      std::string name = prev_ident;
      int arity = 0;
      bool plain = true;
      for (;;) {
        Token a = lex.take();
        if (a.kind == Token::Kind::RParen || a.kind == Token::Kind::End) break;
        if (a.kind == Token::Kind::Ident && !is_keyword(a.text) && !algebra.has_op(a.text))
          ++arity;
        else if (a.kind != Token::Kind::Comma)
          plain = false;
      }
      if (plain && arity > 0) {
        if (const RelationSymbol* r = v.find(name)) {
          if (r->arity != arity)
            throw input_error("relation " + name + " used with inconsistent arities");
        } else {
          v.relations.push_back({name, arity});
        }
      }
    }
    prev_ident = (t.kind == Token::Kind::Ident) ? t.text : std::string();
  }
  return v;
}

}  // namespace mvlaw
