#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace implic {

/// Implicational formulas over propositional variables and the falsity
/// constant F. Values are immutable trees compared structurally; subtrees
/// may be shared between values, but nothing depends on sharing.
class Formula {
 public:
  enum class Kind { Var, Falsum, Implies };

  /// Variable names are one lowercase letter followed by lowercase
  /// letters, digits or underscores. Throws PreconditionError otherwise.
  static Formula var(std::string name);
  static Formula falsum();
  static Formula implies(Formula antecedent, Formula consequent);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_falsum() const { return node_->kind == Kind::Falsum; }
  bool is_implies() const { return node_->kind == Kind::Implies; }

  const std::string& var_name() const;
  Formula antecedent() const;
  Formula consequent() const;

  /// Number of implication nodes.
  std::size_t degree() const { return node_->degree; }

  /// True iff F occurs nowhere in the formula (the formula is an IPC
  /// formula).
  bool in_l() const { return node_->falsum_free; }

  std::uint64_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Var only
    std::shared_ptr<const Node> lhs, rhs;
    std::size_t degree = 0;
    bool falsum_free = true;
    std::uint64_t hash = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static bool equal_nodes(const Node* a, const Node* b);

  std::shared_ptr<const Node> node_;

  friend struct FormulaHash;
};

/// Hash functor for unordered containers keyed by Formula.
struct FormulaHash {
  std::size_t operator()(const Formula& f) const {
    return static_cast<std::size_t>(f.hash());
  }
};

/// ~z, spelled z -> F.
Formula neg(const Formula& z);

/// Parses the grammar
///   formula := imp ; imp := atom ("->" imp)? ; atom := VAR | "F" | "(" formula ")"
/// with "->" right-associative. Throws ParseError with a byte offset.
Formula parse_formula(std::string_view text);

/// Inverse of parse_formula; parenthesizes exactly the antecedents that
/// are themselves implications.
std::string print_formula(const Formula& f);

/// Sorted, duplicate-free list of the variable names occurring in f.
std::vector<std::string> variables(const Formula& f);

}  // namespace implic
