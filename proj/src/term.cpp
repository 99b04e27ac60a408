#include "nafield/term.hpp"

#include <cctype>

namespace nafield {

bool operator==(const Term& a, const Term& b) {
  if (auto* ga = a.as_generator()) {
    auto* gb = b.as_generator();
    return gb && *ga == *gb;
  }
  if (auto* sa = a.as_observable()) {
    auto* sb = b.as_observable();
    return sb && *sa == *sb;
  }
  auto* pa = a.as_product();
  auto* pb = b.as_product();
  return pa && pb && *pa->left == *pb->left && *pa->right == *pb->right;
}

std::string to_string(const Generator& g) {
  std::string s(g.kind == GenKind::F ? "f" : "b");
  s += "[" + std::to_string(g.color) + "," + std::to_string(g.external) + "](" +
       g.point.name + ")";
  return s;
}

std::string to_string(const ObservableSymbol& s) {
  return "Phi[" + std::to_string(s.m.first) + "," + std::to_string(s.m.second) +
         "](" + s.point.name + ")";
}

std::string to_string(const MuSymbol& mu) {
  auto pair_str = [](const IndexPair& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  };
  return "mu2[" + pair_str(mu.left) + "," + pair_str(mu.right) + "]";
}

std::string print(const Term& t) {
  if (auto* g = t.as_generator()) return to_string(*g);
  if (auto* s = t.as_observable()) return to_string(*s);
  auto* p = t.as_product();
  return "(" + print(*p->left) + " " + print(*p->right) + ")";
}

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const char* kind, const std::string& what) const {
    throw ParseError(kind, what, pos_);
  }

  void expect(char c, const char* kind) {
    if (eof()) fail("UnbalancedParens", std::string("expected '") + c + "', got end of input");
    if (peek() != c) fail(kind, std::string("expected '") + c + "'");
    advance();
  }

  int parse_int() {
    skip_ws();
    if (eof()) fail("UnbalancedParens", "expected index, got end of input");
    if (peek() < '1' || peek() > '9') fail("MissingIndex", "expected positive integer index");
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000L) fail("MissingIndex", "index too large");
      advance();
    }
    return static_cast<int>(v);
  }

  std::string parse_ident() {
    skip_ws();
    if (eof()) fail("UnbalancedParens", "expected identifier, got end of input");
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      fail("MissingIndex", "expected identifier");
    std::string id;
    while (!eof() && std::isalnum(static_cast<unsigned char>(peek()))) {
      id += peek();
      advance();
    }
    return id;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

TermPtr parse_term(Cursor& c);

TermPtr parse_leaf(Cursor& c) {
  const std::size_t head = c.pos();
  std::string kw = c.parse_ident();
  if (kw != "f" && kw != "b" && kw != "Phi")
    throw ParseError("UnknownGeneratorKind", "unknown leaf kind '" + kw + "'", head);

  c.skip_ws();
  c.expect('[', "MissingIndex");
  int first = c.parse_int();
  c.skip_ws();
  c.expect(',', "MissingIndex");
  int second = c.parse_int();
  c.skip_ws();
  c.expect(']', "MissingIndex");
  c.skip_ws();
  c.expect('(', "MissingIndex");
  std::string point = c.parse_ident();
  c.skip_ws();
  c.expect(')', "UnbalancedParens");

  if (kw == "Phi") return Term::make(ObservableSymbol{{first, second}, {point}});
  GenKind kind = (kw == "f") ? GenKind::F : GenKind::B;
  return Term::make(Generator{kind, first, second, {point}});
}

TermPtr parse_term(Cursor& c) {
  c.skip_ws();
  if (c.eof()) c.fail("UnbalancedParens", "expected a term, got end of input");
  if (c.peek() == '(') {
    c.advance();
    TermPtr left = parse_term(c);
    TermPtr right = parse_term(c);
    c.skip_ws();
    c.expect(')', "UnbalancedParens");
    return Term::make(std::move(left), std::move(right));
  }
  if (c.peek() == ')') c.fail("UnbalancedParens", "unexpected ')'");
  return parse_leaf(c);
}

}  // namespace

TermPtr parse(std::string_view text) {
  Cursor c(text);
  TermPtr t = parse_term(c);
  c.skip_ws();
  if (!c.eof()) c.fail("TrailingInput", "trailing input after complete term");
  return t;
}

std::optional<QuartetMatch> match_quartet(const Term& t) {
  // shape (((f b) f) b), color matched inside each pair, points matched
  // inside each pair
  auto* outer = t.as_product();
  if (!outer) return std::nullopt;
  const Generator* b2 = outer->right->as_generator();
  auto* mid = outer->left->as_product();
  if (!b2 || !mid) return std::nullopt;
  const Generator* f2 = mid->right->as_generator();
  auto* inner = mid->left->as_product();
  if (!f2 || !inner) return std::nullopt;
  const Generator* f1 = inner->left->as_generator();
  const Generator* b1 = inner->right->as_generator();
  if (!f1 || !b1) return std::nullopt;

  if (f1->kind != GenKind::F || b1->kind != GenKind::B) return std::nullopt;
  if (f2->kind != GenKind::F || b2->kind != GenKind::B) return std::nullopt;
  if (f1->color != b1->color || f2->color != b2->color) return std::nullopt;
  if (f1->point != b1->point || f2->point != b2->point) return std::nullopt;

  return QuartetMatch{{f1->external, b1->external},
                      f1->point,
                      {f2->external, b2->external},
                      f2->point};
}

}  // namespace nafield
