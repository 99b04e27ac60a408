#include "nafield/freepoly.hpp"

#include <algorithm>

#include "nafield/errors.hpp"

namespace nafield {

Coefficient::Coefficient(Rational constant) {
  if (constant != 0) terms_[{}] = std::move(constant);
}

Coefficient::Coefficient(MuSymbol mu, Rational scale) {
  if (scale != 0) terms_[{std::move(mu)}] = std::move(scale);
}

Rational Coefficient::constant_part() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [mono, q] : o.terms_) {
    Rational& slot = terms_[mono];
    slot += q;
    if (slot == 0) terms_.erase(mono);
  }
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [ma, qa] : a.terms_) {
    for (const auto& [mb, qb] : b.terms_) {
      MuMonomial mono;
      mono.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(mono));
      Rational& slot = out.terms_[mono];
      slot += qa * qb;
      if (slot == 0) out.terms_.erase(mono);
    }
  }
  return out;
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [mono, q] : terms_) out.terms_[mono] = -q;
  return out;
}

FreePoly FreePoly::one() { return scalar(Coefficient(1)); }

FreePoly FreePoly::scalar(Coefficient c) {
  FreePoly p;
  p.add_term({}, c);
  return p;
}

FreePoly FreePoly::from_word(Word w, Coefficient c) {
  FreePoly p;
  p.add_term(w, c);
  return p;
}

FreePoly FreePoly::from_symbol(ObservableSymbol s) {
  return from_word({std::move(s)});
}

void FreePoly::add_term(const Word& w, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreePoly operator-(const FreePoly& a, const FreePoly& b) {
  FreePoly out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
  return out;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

std::string to_string(const FreePoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [word, coeff] : p.terms()) {
    for (const auto& [mono, q] : coeff.terms()) {
      const bool neg = q < 0;
      const Rational mag = neg ? Rational(-q) : q;
      std::string body;
      if (mag != 1 || (mono.empty() && word.empty())) body = to_string(mag);
      for (const auto& mu : mono) {
        if (!body.empty()) body += "*";
        body += to_string(mu);
      }
      for (const auto& sym : word) {
        if (!body.empty()) body += "*";
        body += to_string(sym);
      }
      if (s.empty())
        s = (neg ? "-" : "") + body;
      else
        s += (neg ? " - " : " + ") + body;
    }
  }
  return s;
}

FreePoly associative_limit(const FreePoly& p) {
  FreePoly out;
  for (const auto& [word, coeff] : p.terms()) {
    Rational q = coeff.constant_part();
    if (q != 0) out += FreePoly::from_word(word, Coefficient(q));
  }
  return out;
}

double evaluate_classical(const FreePoly& p, const PhiValues& phi_values,
                          const MuValues& mu_values) {
  double total = 0.0;
  for (const auto& [word, coeff] : p.terms()) {
    for (const auto& [mono, q] : coeff.terms()) {
      double v = q.convert_to<double>();
      for (const auto& mu : mono) {
        auto it = mu_values.find({mu.left, mu.right});
        if (it == mu_values.end())
          throw Error("MissingAssignment", "no value for " + to_string(mu));
        v *= it->second;
      }
      for (const auto& sym : word) {
        auto it = phi_values.find({sym.m, sym.point});
        if (it == phi_values.end())
          throw Error("MissingAssignment", "no value for " + to_string(sym));
        v *= it->second;
      }
      total += v;
    }
  }
  return total;
}

}  // namespace nafield
