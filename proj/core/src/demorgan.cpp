#include "mvlaw/demorgan.hpp"

#include "mvlaw/error.hpp"

namespace mvlaw {

DeMorganReport demorgan_check(const LatticeAlgebra& a) {
  if (!a.has_op("not")) throw input_error("demorgan_check: algebra has no negation");
  const int n = a.size();
  const Elem bot = a.require_bottom();
  const Elem top = a.require_top();
  auto neg = [&](Elem x) { return a.apply1("not", x); };
  DeMorganReport rep;

  auto scan2 = [&](auto pred) -> std::optional<std::string> {
    for (Elem v = 0; v < n; ++v)
      for (Elem w = 0; w < n; ++w)
        if (!pred(v, w)) return "(" + a.label(v) + "," + a.label(w) + ")";
    return std::nullopt;
  };
  auto scan1 = [&](auto pred) -> std::optional<std::string> {
    for (Elem v = 0; v < n; ++v)
      if (!pred(v)) return "(" + a.label(v) + ")";
    return std::nullopt;
  };
  auto entry = [](std::string law, std::optional<std::string> wit) {
    DeMorganReport::Entry e;
    e.law = std::move(law);
    e.holds = !wit.has_value();
    if (wit) e.witness = *wit;
    return e;
  };

  rep.conditions.push_back(entry(
      "(1) not distributes over meet/join",
      scan2([&](Elem v, Elem w) {
        return neg(a.meet(v, w)) == a.join(neg(v), neg(w)) &&
               neg(a.join(v, w)) == a.meet(neg(v), neg(w));
      })));
  rep.conditions.push_back(
      entry("(2) v <= not not v", scan1([&](Elem v) { return a.leq(v, neg(neg(v))); })));
  rep.conditions.push_back(entry(
      "(3) not 1 = 0", neg(top) == bot ? std::nullopt
                                       : std::optional<std::string>("(" + a.label(top) + ")")));

  rep.derived.push_back(entry(
      "(4) antitone", scan2([&](Elem v, Elem w) { return !a.leq(v, w) || a.leq(neg(w), neg(v)); })));
  rep.derived.push_back(entry(
      "(5) not not not v = not v", scan1([&](Elem v) { return neg(neg(neg(v))) == neg(v); })));
  rep.derived.push_back(entry(
      "(6) not 0 = not not 1 = 1, not not 0 = 0",
      (neg(bot) == top && neg(neg(top)) == top && neg(neg(bot)) == bot)
          ? std::nullopt
          : std::optional<std::string>("(bounds)")));

  // (7) only makes sense when (1)-(3) hold; compute the constants and check.
  if (rep.ok()) {
    Elem eps = bot, epsp = bot, delta = top, deltap = top;
    for (Elem x = 0; x < n; ++x) {
      eps = a.join(eps, a.meet(x, neg(x)));
      epsp = a.join(epsp, a.meet(neg(x), neg(neg(x))));
      delta = a.meet(delta, a.join(x, neg(x)));
      deltap = a.meet(deltap, a.join(neg(x), neg(neg(x))));
    }
    bool chain = a.leq(bot, eps) && a.leq(eps, epsp) && a.leq(epsp, delta) &&
                 a.leq(delta, deltap) && a.leq(deltap, top) && neg(eps) == deltap &&
                 neg(epsp) == deltap && neg(delta) == epsp && neg(deltap) == epsp;
    rep.derived.push_back(
        entry("(7) 0<=eps<=eps'<=delta<=delta'<=1 and negation swaps them",
              chain ? std::nullopt : std::optional<std::string>("(constants)")));
  }

  rep.distributive = !scan2([&](Elem v, Elem w) {
                       for (Elem u = 0; u < n; ++u)
                         if (a.meet(u, a.join(v, w)) != a.join(a.meet(u, v), a.meet(u, w)))
                           return false;
                       return true;
                     }).has_value();
  return rep;
}

DeMorganConstants demorgan_constants(const LatticeAlgebra& a) {
  DeMorganReport rep = demorgan_check(a);
  if (!rep.ok())
    throw input_error(
        "demorgan_constants: negation conditions fail; see demorgan_check for witnesses");
  const int n = a.size();
  auto neg = [&](Elem x) { return a.apply1("not", x); };
  DeMorganConstants c{a.require_bottom(), a.require_bottom(), a.require_top(),
                      a.require_top()};
  for (Elem x = 0; x < n; ++x) {
    c.eps = a.join(c.eps, a.meet(x, neg(x)));
    c.eps_prime = a.join(c.eps_prime, a.meet(neg(x), neg(neg(x))));
    c.delta = a.meet(c.delta, a.join(x, neg(x)));
    c.delta_prime = a.meet(c.delta_prime, a.join(neg(x), neg(neg(x))));
  }
  return c;
}

}  // namespace mvlaw
