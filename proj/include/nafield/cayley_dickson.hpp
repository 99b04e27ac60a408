#pragma once

#include <span>
#include <string>
#include <vector>

#include "nafield/errors.hpp"
#include "nafield/rational.hpp"

namespace nafield {

/// Element of the 2^k-dimensional Cayley-Dickson algebra over Scalar.
/// Scalar is any exact or floating ring type (long long, Rational, double).
template <typename Scalar>
struct CDElement {
  int level = 0;
  std::vector<Scalar> coords;  // size 2^level

  bool operator==(const CDElement&) const = default;
};

template <typename Scalar>
CDElement<Scalar> cd_zero(int level) {
  return {level, std::vector<Scalar>(std::size_t(1) << level, Scalar(0))};
}

template <typename Scalar>
CDElement<Scalar> cd_basis(int level, std::size_t index) {
  auto x = cd_zero<Scalar>(level);
  x.coords.at(index) = Scalar(1);
  return x;
}

template <typename Scalar>
CDElement<Scalar> cd_one(int level) {
  return cd_basis<Scalar>(level, 0);
}

template <typename Scalar>
bool cd_is_zero(const CDElement<Scalar>& x) {
  for (const auto& c : x.coords)
    if (!(c == Scalar(0))) return false;
  return true;
}

namespace detail {

template <typename Scalar>
void check_levels(const CDElement<Scalar>& x, const CDElement<Scalar>& y) {
  if (x.level != y.level)
    throw Error("LevelMismatch", "Cayley-Dickson levels differ: " +
                                     std::to_string(x.level) + " vs " +
                                     std::to_string(y.level));
}

/// Doubling product on coordinate spans, one fixed convention:
///   (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)),  conj(a,b) = (conj a, -b).
/// Conjugation reduces to negating every coordinate except the first.
template <typename Scalar>
void mul_span(std::span<const Scalar> x, std::span<const Scalar> y,
              std::span<Scalar> out) {
  const std::size_t n = x.size();
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  auto a = x.first(h), b = x.subspan(h);
  auto c = y.first(h), d = y.subspan(h);

  std::vector<Scalar> conj_d(d.begin(), d.end());
  for (std::size_t i = 1; i < h; ++i) conj_d[i] = -conj_d[i];
  std::vector<Scalar> conj_c(c.begin(), c.end());
  for (std::size_t i = 1; i < h; ++i) conj_c[i] = -conj_c[i];

  std::vector<Scalar> t(h);
  mul_span<Scalar>(a, c, out.first(h));                       // ac
  mul_span<Scalar>({conj_d.data(), h}, b, {t.data(), h});     // conj(d) b
  for (std::size_t i = 0; i < h; ++i) out[i] = out[i] - t[i];
  mul_span<Scalar>(d, a, out.subspan(h));                     // d a
  mul_span<Scalar>(b, {conj_c.data(), h}, {t.data(), h});     // b conj(c)
  for (std::size_t i = 0; i < h; ++i) out[h + i] = out[h + i] + t[i];
}

}  // namespace detail

template <typename Scalar>
CDElement<Scalar> cd_mul(const CDElement<Scalar>& x, const CDElement<Scalar>& y) {
  detail::check_levels(x, y);
  auto out = cd_zero<Scalar>(x.level);
  detail::mul_span<Scalar>({x.coords.data(), x.coords.size()},
                           {y.coords.data(), y.coords.size()},
                           {out.coords.data(), out.coords.size()});
  return out;
}

template <typename Scalar>
CDElement<Scalar> cd_conj(const CDElement<Scalar>& x) {
  auto out = x;
  for (std::size_t i = 1; i < out.coords.size(); ++i) out.coords[i] = -out.coords[i];
  return out;
}

template <typename Scalar>
CDElement<Scalar> operator+(const CDElement<Scalar>& x, const CDElement<Scalar>& y) {
  detail::check_levels(x, y);
  auto out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = out.coords[i] + y.coords[i];
  return out;
}

template <typename Scalar>
CDElement<Scalar> operator-(const CDElement<Scalar>& x, const CDElement<Scalar>& y) {
  detail::check_levels(x, y);
  auto out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = out.coords[i] - y.coords[i];
  return out;
}

template <typename Scalar>
CDElement<Scalar> operator-(const CDElement<Scalar>& x) {
  auto out = x;
  for (auto& c : out.coords) c = -c;
  return out;
}

template <typename Scalar>
CDElement<Scalar> operator*(const Scalar& s, const CDElement<Scalar>& x) {
  auto out = x;
  for (auto& c : out.coords) c = s * c;
  return out;
}

template <typename Scalar>
CDElement<Scalar> operator*(const CDElement<Scalar>& x, const CDElement<Scalar>& y) {
  return cd_mul(x, y);
}

/// (x, y, z) = (xy)z - x(yz); zero on all triples iff associative.
template <typename Scalar>
CDElement<Scalar> associator(const CDElement<Scalar>& x, const CDElement<Scalar>& y,
                             const CDElement<Scalar>& z) {
  return cd_mul(cd_mul(x, y), z) - cd_mul(x, cd_mul(y, z));
}

template <typename Scalar>
CDElement<Scalar> commutator(const CDElement<Scalar>& x, const CDElement<Scalar>& y) {
  return cd_mul(x, y) - cd_mul(y, x);
}

/// Basis expansion like "e1+2*e3-1/2*e7"; "0" for the zero element.
template <typename Scalar>
std::string cd_to_string(const CDElement<Scalar>& x) {
  std::string s;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    const Scalar& c = x.coords[i];
    if (c == Scalar(0)) continue;
    std::string mag;
    bool neg = c < Scalar(0);
    Scalar a = neg ? Scalar(-c) : c;
    if (!(a == Scalar(1))) {
      if constexpr (std::is_same_v<Scalar, Rational>) {
        mag = to_string(a) + "*";
      } else {
        mag = std::to_string(a) + "*";
      }
    }
    s += s.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
    s += mag + "e" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace nafield
