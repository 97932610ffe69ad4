#include "posetpoly/expr.hpp"

#include <cctype>
#include <map>

#include "posetpoly/errors.hpp"

namespace posetpoly {

ExprPtr Expr::chain(int n) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Chain;
  e->count = n;
  return e;
}

ExprPtr Expr::antichain(int n) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Antichain;
  e->count = n;
  return e;
}

ExprPtr Expr::op(ExprPtr inner) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Op;
  e->lhs = std::move(inner);
  return e;
}

ExprPtr Expr::ordinal(ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::OrdinalSum;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::disjoint(ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::DisjointUnion;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::literal(std::vector<std::string> labels,
                      std::vector<std::pair<std::string, std::string>> covers) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Literal;
  e->labels = std::move(labels);
  e->covers = std::move(covers);
  return e;
}

ExprPtr Expr::ref(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Ref;
  e->name = std::move(name);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  auto same = [](const ExprPtr& x, const ExprPtr& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  switch (a.kind) {
    case Expr::Kind::Chain:
    case Expr::Kind::Antichain:
      return a.count == b.count;
    case Expr::Kind::Op:
      return same(a.lhs, b.lhs);
    case Expr::Kind::OrdinalSum:
    case Expr::Kind::DisjointUnion:
      return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
    case Expr::Kind::Literal:
      return a.labels == b.labels && a.covers == b.covers;
    case Expr::Kind::Ref:
      return a.name == b.name;
  }
  return false;
}

bool operator==(const Program& a, const Program& b) {
  if (a.bindings.size() != b.bindings.size()) return false;
  for (std::size_t k = 0; k < a.bindings.size(); ++k) {
    if (a.bindings[k].first != b.bindings[k].first) return false;
    if (!(*a.bindings[k].second == *b.bindings[k].second)) return false;
  }
  return *a.body == *b.body;
}

namespace {

enum class Tok { Ident, Int, LParen, RParen, LBrace, RBrace, Semi, Comma, Less, Plus, Equals, End };

struct Token {
  Tok type;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const int line = line_;
      const int col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < src_.size() && is_word_char(src_[pos_])) word += advance();
        out.push_back({Tok::Ident, word, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          digits += advance();
        }
        out.push_back({Tok::Int, digits, line, col});
      } else {
        Tok t;
        switch (c) {
          case '(': t = Tok::LParen; break;
          case ')': t = Tok::RParen; break;
          case '{': t = Tok::LBrace; break;
          case '}': t = Tok::RBrace; break;
          case ';': t = Tok::Semi; break;
          case ',': t = Tok::Comma; break;
          case '<': t = Tok::Less; break;
          case '+': t = Tok::Plus; break;
          case '=': t = Tok::Equals; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        advance();
        out.push_back({t, std::string(1, c), line, col});
      }
    }
  }

 private:
  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_keyword(const std::string& w) {
  return w == "let" || w == "chain" || w == "antichain" || w == "op";
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Less: return "'<'";
    case Tok::Plus: return "'+'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    while (peek().type == Tok::Ident && peek().text == "let") {
      next();
      const Token name = expect(Tok::Ident);
      if (is_keyword(name.text)) fail("keyword '" + name.text + "' cannot be bound", name);
      expect(Tok::Equals);
      ExprPtr value = expr();
      expect(Tok::Semi);
      bound_.push_back(name.text);
      p.bindings.emplace_back(name.text, std::move(value));
    }
    p.body = expr();
    if (peek().type != Tok::End) fail(std::string("expected end of input, found ") + describe(peek().type), peek());
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  [[noreturn]] static void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg, at.line, at.column);
  }

  Token expect(Tok t) {
    if (peek().type != t) {
      fail(std::string("expected ") + describe(t) + ", found " + describe(peek().type), peek());
    }
    return next();
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().type == Tok::Less) {
      next();
      e = Expr::ordinal(e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = atom();
    while (peek().type == Tok::Plus) {
      next();
      e = Expr::disjoint(e, atom());
    }
    return e;
  }

  int count_arg() {
    expect(Tok::LParen);
    const Token n = expect(Tok::Int);
    if (n.text.size() > 3 || std::stoi(n.text) > kMaxElements) {
      fail("size " + n.text + " exceeds 64 elements", n);
    }
    expect(Tok::RParen);
    return std::stoi(n.text);
  }

  ExprPtr atom() {
    const Token t = peek();
    switch (t.type) {
      case Tok::Ident: {
        next();
        if (t.text == "chain") return Expr::chain(count_arg());
        if (t.text == "antichain") return Expr::antichain(count_arg());
        if (t.text == "op") {
          expect(Tok::LParen);
          ExprPtr inner = expr();
          expect(Tok::RParen);
          return Expr::op(std::move(inner));
        }
        if (t.text == "let") fail("'let' must precede the expression", t);
        if (std::find(bound_.begin(), bound_.end(), t.text) == bound_.end()) {
          throw UnboundRefError("unbound name '" + t.text + "'", t.line, t.column);
        }
        return Expr::ref(t.text);
      }
      case Tok::LParen: {
        next();
        ExprPtr inner = expr();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::LBrace:
        return literal();
      default:
        fail(std::string("expected a poset, found ") + describe(t.type), t);
    }
  }

  std::string label() {
    const Token t = peek();
    if (t.type != Tok::Ident && t.type != Tok::Int) fail("expected a label", t);
    next();
    return t.text;
  }

  ExprPtr literal() {
    expect(Tok::LBrace);
    std::vector<std::string> labels;
    if (peek().type != Tok::Semi) {
      labels.push_back(label());
      while (peek().type == Tok::Comma) {
        next();
        labels.push_back(label());
      }
    }
    expect(Tok::Semi);
    std::vector<std::pair<std::string, std::string>> covers;
    if (peek().type != Tok::RBrace) {
      for (;;) {
        std::string lo = label();
        expect(Tok::Less);
        std::string hi = label();
        covers.emplace_back(lo, hi);
        while (peek().type == Tok::Less) {
          next();
          lo = hi;
          hi = label();
          covers.emplace_back(lo, hi);
        }
        if (peek().type != Tok::Comma) break;
        next();
      }
    }
    expect(Tok::RBrace);
    return Expr::literal(std::move(labels), std::move(covers));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::OrdinalSum: return 1;
    case Expr::Kind::DisjointUnion: return 2;
    default: return 3;
  }
}

void print_into(const Expr& e, std::string& out);

void print_child(const Expr& child, bool parens, std::string& out) {
  if (parens) out += "(";
  print_into(child, out);
  if (parens) out += ")";
}

void print_into(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Chain:
      out += "chain(" + std::to_string(e.count) + ")";
      return;
    case Expr::Kind::Antichain:
      out += "antichain(" + std::to_string(e.count) + ")";
      return;
    case Expr::Kind::Op:
      out += "op(";
      print_into(*e.lhs, out);
      out += ")";
      return;
    case Expr::Kind::OrdinalSum:
    case Expr::Kind::DisjointUnion: {
      const int p = precedence(e);
      print_child(*e.lhs, precedence(*e.lhs) < p, out);
      out += e.kind == Expr::Kind::OrdinalSum ? " < " : " + ";
      print_child(*e.rhs, precedence(*e.rhs) <= p, out);
      return;
    }
    case Expr::Kind::Literal: {
      out += "{";
      for (std::size_t k = 0; k < e.labels.size(); ++k) {
        if (k) out += ", ";
        out += e.labels[k];
      }
      out += "; ";
      for (std::size_t k = 0; k < e.covers.size(); ++k) {
        if (k) out += ", ";
        out += e.covers[k].first + " < " + e.covers[k].second;
      }
      out += "}";
      return;
    }
    case Expr::Kind::Ref:
      out += e.name;
      return;
  }
}

using Env = std::map<std::string, Poset>;

Poset eval(const Expr& e, const Env& env) {
  switch (e.kind) {
    case Expr::Kind::Chain: return Poset::chain(e.count);
    case Expr::Kind::Antichain: return Poset::antichain(e.count);
    case Expr::Kind::Op: return opposite(eval(*e.lhs, env));
    case Expr::Kind::OrdinalSum: return ordinal_sum(eval(*e.lhs, env), eval(*e.rhs, env));
    case Expr::Kind::DisjointUnion: return disjoint_union(eval(*e.lhs, env), eval(*e.rhs, env));
    case Expr::Kind::Literal: return Poset::from_covers(e.labels, e.covers);
    case Expr::Kind::Ref: {
      auto it = env.find(e.name);
      if (it == env.end()) throw UnboundRefError("unbound name '" + e.name + "'", 0, 0);
      return it->second;
    }
  }
  throw Error("unknown expression kind");
}

using TreeEnv = std::map<std::string, std::optional<DecompositionTree>>;

std::optional<DecompositionTree> tree_of(const Expr& e, const TreeEnv& env) {
  switch (e.kind) {
    case Expr::Kind::Chain:
    case Expr::Kind::Antichain:
    case Expr::Kind::Literal: {
      const Poset p = eval(e, {});
      if (is_x_free(p)) return make_leaf(p);
      return in_family(p);
    }
    case Expr::Kind::Op: {
      auto inner = tree_of(*e.lhs, env);
      if (!inner) return std::nullopt;
      return opposite(*inner);
    }
    case Expr::Kind::OrdinalSum:
    case Expr::Kind::DisjointUnion: {
      auto a = tree_of(*e.lhs, env);
      auto b = tree_of(*e.rhs, env);
      if (!a || !b) return std::nullopt;
      // Empty operands carry no faces worth a node.
      if (a->size() == 0) return b;
      if (b->size() == 0) return a;
      const auto kind = e.kind == Expr::Kind::OrdinalSum ? DecompositionTree::Kind::OrdinalSum
                                                         : DecompositionTree::Kind::DisjointUnion;
      return make_node(kind, {std::move(*a), std::move(*b)});
    }
    case Expr::Kind::Ref:
      return env.at(e.name);
  }
  return std::nullopt;
}

}  // namespace

Program parse_program(std::string_view src) {
  return Parser(Lexer(src).run()).program();
}

std::string print(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

std::string print(const Program& p) {
  std::string out;
  for (const auto& [name, value] : p.bindings) {
    out += "let " + name + " = " + print(*value) + ";\n";
  }
  return out + print(*p.body);
}

Poset evaluate(const Program& p) {
  Env env;
  for (const auto& [name, value] : p.bindings) env[name] = eval(*value, env);
  return eval(*p.body, env);
}

Poset evaluate(std::string_view src) { return evaluate(parse_program(src)); }

std::optional<DecompositionTree> expression_tree(const Program& p) {
  TreeEnv env;
  for (const auto& [name, value] : p.bindings) env[name] = tree_of(*value, env);
  return tree_of(*p.body, env);
}

}  // namespace posetpoly
