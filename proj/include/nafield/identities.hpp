#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nafield/cayley_dickson.hpp"

namespace nafield {

enum class AlgebraIdentity {
  Associative,       // (x,y,z) = 0
  Flexible,          // (x,y,z) = -(z,y,x)
  Alternative,       // (xx)y = x(xy) and y(xx) = (yx)x
  Jordan,            // commutative and (xy)(xx) = x(y(xx))
  PowerAssociative,  // all parenthesizations of x^n agree
  LieAdmissible,     // Jacobi identity for [x,y] = xy - yx
  Unitary            // two-sided identity element
};

std::string identity_name(AlgebraIdentity id);
std::optional<AlgebraIdentity> identity_from_name(const std::string& name);

struct CheckMode {
  enum class Kind { ExhaustiveBasis, Randomized } kind = Kind::ExhaustiveBasis;
  int trials = 200;
  std::uint64_t seed = 12345;

  static CheckMode exhaustive() { return {}; }
  static CheckMode randomized(int trials, std::uint64_t seed) {
    return {Kind::Randomized, trials, seed};
  }
};

/// A failed law instance: the elements it was evaluated on and the two
/// unequal products, stored so the inequality can be recomputed from
/// scratch with cd_mul.
struct Counterexample {
  std::vector<CDElement<Rational>> elements;
  CDElement<Rational> lhs;
  CDElement<Rational> rhs;
  std::string law;  // e.g. "(x*x)*y vs x*(x*y)"
};

struct IdentityReport {
  int level = 0;
  AlgebraIdentity identity = AlgebraIdentity::Associative;
  int power_n = 0;  // set for PowerAssociative
  bool holds = false;
  std::optional<Counterexample> counterexample;
};

/// Certifies one identity on the level-k Cayley-Dickson algebra.
/// Multilinear identities (Associative, Flexible, linearized Alternative,
/// LieAdmissible, Unitary) are decided exhaustively on basis tuples in
/// ExhaustiveBasis mode, which suffices for the whole algebra; the
/// nonlinear ones (Jordan, PowerAssociative) always use randomized
/// elements with exact rational coordinates (mode supplies trials/seed).
/// Throws Error("UnsupportedLevel", ...) for k > 5 exhaustive or k > 8.
IdentityReport check_identity(int level, AlgebraIdentity id, const CheckMode& mode,
                              int power_n = 8);

/// First basis triple (by lexicographic index order) with nonzero
/// associator, if any; the nonassociativity exhibit for a level.
std::optional<std::array<std::size_t, 3>> first_nonzero_basis_associator(int level);

/// "level=<k> identity=<name> holds=<bool> [counterexample=<tuple>]"
std::string to_line(const IdentityReport& r);

}  // namespace nafield
