#include "nafield/rewrite.hpp"

namespace nafield {

FreePoly reduce_quartet(const QuartetMatch& q) {
  FreePoly words = FreePoly::from_word({ObservableSymbol{q.m1, q.p1}, ObservableSymbol{q.m2, q.p2}});
  return words - FreePoly::scalar(Coefficient(MuSymbol{q.m1, q.m2}));
}

FreePoly normalize(const Term& t) {
  if (auto q = match_quartet(t)) return reduce_quartet(*q);
  if (auto* s = t.as_observable()) return FreePoly::from_symbol(*s);
  if (auto* p = t.as_product())
    // left-to-right leaf order is preserved: word concatenation is
    // associative, so any bracketing of the recursion gives the same poly
    return normalize(*p->left) * normalize(*p->right);
  throw Error("NotReducible",
              "bare constituent " + print(t) + " outside any quartet has no reduction rule");
}

}  // namespace nafield
