#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "nafield/errors.hpp"

namespace nafield {

/// Opaque spacetime point. Only identity matters, never coordinates.
struct PointLabel {
  std::string name;  // nonempty, [a-zA-Z][a-zA-Z0-9]*
  auto operator<=>(const PointLabel&) const = default;
};

/// Combined external index m = (alpha, beta), both >= 1.
using IndexPair = std::pair<int, int>;

enum class GenKind { F, B };

/// A single unobservable constituent f^i_alpha(x) or b_{i beta}(x).
struct Generator {
  GenKind kind;
  int color;     // summation index i >= 1
  int external;  // alpha for F, beta for B, >= 1
  PointLabel point;
  auto operator<=>(const Generator&) const = default;
};

/// An observable factor Phi_m(x), m = (alpha, beta).
struct ObservableSymbol {
  IndexPair m;
  PointLabel point;
  auto operator<=>(const ObservableSymbol&) const = default;
};

/// Central scalar symbol mu^2_{m_a m_b}. No exchange symmetry is assumed
/// between the two index pairs.
struct MuSymbol {
  IndexPair left;
  IndexPair right;
  auto operator<=>(const MuSymbol&) const = default;
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable binary product tree over generators and observable symbols.
/// Every product is explicitly binary: nonassociativity forbids a default
/// grouping, so the tree is the whole story.
class Term {
public:
  struct Product {
    TermPtr left;
    TermPtr right;
  };
  using Node = std::variant<Generator, ObservableSymbol, Product>;

  explicit Term(Node n) : node_(std::move(n)) {}

  static TermPtr make(Generator g) { return std::make_shared<const Term>(Node(std::move(g))); }
  static TermPtr make(ObservableSymbol s) { return std::make_shared<const Term>(Node(std::move(s))); }
  static TermPtr make(TermPtr left, TermPtr right) {
    return std::make_shared<const Term>(Node(Product{std::move(left), std::move(right)}));
  }

  const Node& node() const noexcept { return node_; }
  bool is_product() const noexcept { return std::holds_alternative<Product>(node_); }
  const Generator* as_generator() const noexcept { return std::get_if<Generator>(&node_); }
  const ObservableSymbol* as_observable() const noexcept { return std::get_if<ObservableSymbol>(&node_); }
  const Product* as_product() const noexcept { return std::get_if<Product>(&node_); }

private:
  Node node_;
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

/// Parses the fully parenthesized grammar
///   term := leaf | "(" term term ")"
///   leaf := f[i,a](pt) | b[i,b](pt) | Phi[a,b](pt)
/// Throws ParseError (kinds: UnbalancedParens, UnknownGeneratorKind,
/// MissingIndex, TrailingInput) with the byte offset of the failure.
TermPtr parse(std::string_view text);

/// Canonical text form; parse(print(t)) == t.
std::string print(const Term& t);

std::string to_string(const Generator& g);
std::string to_string(const ObservableSymbol& s);
std::string to_string(const MuSymbol& mu);

/// Result of recognizing the left-nested shape (((f b) f) b) with matching
/// color index and point inside each f-b pair.
struct QuartetMatch {
  IndexPair m1;
  PointLabel p1;
  IndexPair m2;
  PointLabel p2;
};

std::optional<QuartetMatch> match_quartet(const Term& t);

}  // namespace nafield
