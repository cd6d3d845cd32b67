#include "core/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace implic {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

bool valid_var_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Formula Formula::var(std::string name) {
  if (!valid_var_name(name)) {
    throw PreconditionError("invalid variable name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->hash = mix64(std::hash<std::string>{}(name) ^ 0x56e9d7a31c08f2ddULL);
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::falsum() {
  static const std::shared_ptr<const Node> falsum_node = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Falsum;
    node->falsum_free = false;
    node->hash = 0x8f1b3d5c2a97e641ULL;
    return node;
  }();
  return Formula(falsum_node);
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Implies;
  node->degree = 1 + antecedent.node_->degree + consequent.node_->degree;
  node->falsum_free =
      antecedent.node_->falsum_free && consequent.node_->falsum_free;
  node->hash = mix64((antecedent.node_->hash * 0x100000001b3ULL) ^
                     (consequent.node_->hash + 0x7b0c1d9e3f5a2468ULL));
  node->lhs = std::move(antecedent.node_);
  node->rhs = std::move(consequent.node_);
  return Formula(std::move(node));
}

const std::string& Formula::var_name() const {
  if (node_->kind != Kind::Var) throw PreconditionError("not a variable");
  return node_->name;
}

Formula Formula::antecedent() const {
  if (node_->kind != Kind::Implies) throw PreconditionError("not an implication");
  return Formula(node_->lhs);
}

Formula Formula::consequent() const {
  if (node_->kind != Kind::Implies) throw PreconditionError("not an implication");
  return Formula(node_->rhs);
}

bool Formula::equal_nodes(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->degree != b->degree ||
      a->falsum_free != b->falsum_free) {
    return false;
  }
  switch (a->kind) {
    case Kind::Var:
      return a->name == b->name;
    case Kind::Falsum:
      return true;
    case Kind::Implies:
      return equal_nodes(a->lhs.get(), b->lhs.get()) &&
             equal_nodes(a->rhs.get(), b->rhs.get());
  }
  return false;
}

bool operator==(const Formula& a, const Formula& b) {
  return Formula::equal_nodes(a.node_.get(), b.node_.get());
}

Formula neg(const Formula& z) {
  return Formula::implies(z, Formula::falsum());
}

// --- parsing ---------------------------------------------------------------

namespace {

struct Token {
  enum class Type { Var, Falsum, Arrow, LParen, RParen, End };
  Type type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
            text_[pos_] == '\n')) {
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Type::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      current_ = {Token::Type::LParen, "(", start};
      return;
    }
    if (c == ')') {
      ++pos_;
      current_ = {Token::Type::RParen, ")", start};
      return;
    }
    if (c == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        pos_ += 2;
        current_ = {Token::Type::Arrow, "->", start};
        return;
      }
      throw ParseError("lexical error at offset " + std::to_string(start) +
                           ": expected '->'",
                       start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_')) {
        ++end;
      }
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "F") {
        current_ = {Token::Type::Falsum, word, start};
        return;
      }
      if (!valid_var_name(word)) {
        throw ParseError("lexical error at offset " + std::to_string(start) +
                             ": bad token '" + word + "'",
                         start);
      }
      current_ = {Token::Type::Var, word, start};
      return;
    }
    throw ParseError("lexical error at offset " + std::to_string(start) +
                         ": unexpected character '" + std::string(1, c) + "'",
                     start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Token::Type::End, "", 0};
};

Formula parse_imp(Lexer& lex);

Formula parse_atom(Lexer& lex) {
  Token t = lex.take();
  switch (t.type) {
    case Token::Type::Var:
      return Formula::var(t.text);
    case Token::Type::Falsum:
      return Formula::falsum();
    case Token::Type::LParen: {
      Formula inner = parse_imp(lex);
      Token close = lex.take();
      if (close.type != Token::Type::RParen) {
        throw ParseError("syntax error at offset " + std::to_string(close.pos) +
                             ": expected ')'",
                         close.pos);
      }
      return inner;
    }
    case Token::Type::Arrow:
      throw ParseError("syntax error at offset " + std::to_string(t.pos) +
                           ": dangling '->'",
                       t.pos);
    case Token::Type::RParen:
      throw ParseError("syntax error at offset " + std::to_string(t.pos) +
                           ": unbalanced ')'",
                       t.pos);
    case Token::Type::End:
      throw ParseError("syntax error at offset " + std::to_string(t.pos) +
                           ": unexpected end of input",
                       t.pos);
  }
  throw ParseError("syntax error", t.pos);
}

Formula parse_imp(Lexer& lex) {
  Formula lhs = parse_atom(lex);
  if (lex.peek().type == Token::Type::Arrow) {
    lex.take();
    Formula rhs = parse_imp(lex);
    return Formula::implies(std::move(lhs), std::move(rhs));
  }
  return lhs;
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += f.var_name();
      return;
    case Formula::Kind::Falsum:
      out += 'F';
      return;
    case Formula::Kind::Implies: {
      Formula lhs = f.antecedent();
      if (lhs.is_implies()) {
        out += '(';
        print_into(lhs, out);
        out += ')';
      } else {
        print_into(lhs, out);
      }
      out += " -> ";
      print_into(f.consequent(), out);
      return;
    }
  }
}

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out.insert(f.var_name());
      return;
    case Formula::Kind::Falsum:
      return;
    case Formula::Kind::Implies:
      collect_variables(f.antecedent(), out);
      collect_variables(f.consequent(), out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Lexer lex(text);
  Formula f = parse_imp(lex);
  Token t = lex.take();
  if (t.type != Token::Type::End) {
    throw ParseError("syntax error at offset " + std::to_string(t.pos) +
                         ": unexpected trailing input",
                     t.pos);
  }
  return f;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> names;
  collect_variables(f, names);
  return std::vector<std::string>(names.begin(), names.end());
}

}  // namespace implic
