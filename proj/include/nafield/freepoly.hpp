#pragma once

#include <map>
#include <string>
#include <vector>

#include "nafield/rational.hpp"
#include "nafield/term.hpp"

namespace nafield {

/// Ordered product of observable symbols. Order is significant (Phi symbols
/// are not assumed to commute); the empty word is the identity.
using Word = std::vector<ObservableSymbol>;

/// Commutative product of mu^2 symbols, kept sorted.
using MuMonomial = std::vector<MuSymbol>;

/// Polynomial with exact rational coefficients in the commuting mu^2
/// variables. Canonical: monomials sorted, zero coefficients dropped.
class Coefficient {
public:
  Coefficient() = default;
  Coefficient(int constant) : Coefficient(Rational(constant)) {}
  Coefficient(Rational constant);
  Coefficient(MuSymbol mu, Rational scale = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<MuMonomial, Rational>& terms() const noexcept { return terms_; }
  /// Coefficient of the empty monomial (the mu-free part).
  Rational constant_part() const;

  Coefficient& operator+=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient operator-() const;
  bool operator==(const Coefficient&) const = default;

private:
  std::map<MuMonomial, Rational> terms_;
};

/// Term order used everywhere a FreePoly is rendered or compared:
/// longer words first, then lexicographic on the symbols.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

/// Element of the free associative algebra over observable symbols with
/// Coefficient scalars. No zero coefficients are stored; equality is
/// structural equality of the canonical form.
class FreePoly {
public:
  FreePoly() = default;

  static FreePoly zero() { return {}; }
  static FreePoly one();
  static FreePoly scalar(Coefficient c);
  static FreePoly from_word(Word w, Coefficient c = Coefficient(1));
  static FreePoly from_symbol(ObservableSymbol s);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Word, Coefficient, WordOrder>& terms() const noexcept { return terms_; }

  FreePoly& operator+=(const FreePoly& o);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(const FreePoly& a, const FreePoly& b);
  /// Bilinear extension of word concatenation; coefficients multiply
  /// commutatively. Associative (the free monoid product is).
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  bool operator==(const FreePoly&) const = default;

private:
  void add_term(const Word& w, const Coefficient& c);
  std::map<Word, Coefficient, WordOrder> terms_;
};

/// Canonical text form, the golden-file format: signed terms sorted by
/// (word length desc, word, coefficient monomial), factors joined by '*',
/// e.g. "Phi[1,1](x1)*Phi[2,2](x2) - mu2[(1,1),(2,2)]".
std::string to_string(const FreePoly& p);

/// Drops every term whose coefficient carries a mu^2 factor, i.e. evaluates
/// the associative limit mu -> 0.
FreePoly associative_limit(const FreePoly& p);

using PhiValues = std::map<std::pair<IndexPair, PointLabel>, double>;
using MuValues = std::map<std::pair<IndexPair, IndexPair>, double>;

/// Substitutes commuting real numbers for every symbol and sums.
/// Throws Error("MissingAssignment", ...) naming the unassigned symbol.
double evaluate_classical(const FreePoly& p, const PhiValues& phi_values,
                          const MuValues& mu_values);

}  // namespace nafield
