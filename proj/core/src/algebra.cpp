#include "mvlaw/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mvlaw/error.hpp"

namespace mvlaw {
namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

// AlgebraBuilder is a friend used by the factory functions below.
class AlgebraBuilder {
 public:
  static AlgebraPtr build(std::vector<std::string> carrier,
                          std::map<std::string, Operation> ops,
                          std::optional<Elem> bottom, std::optional<Elem> top,
                          std::vector<std::optional<Rational>> values) {
    auto a = std::shared_ptr<LatticeAlgebra>(new LatticeAlgebra());
    a->carrier_ = std::move(carrier);
    a->ops_ = std::move(ops);
    a->bottom_ = bottom;
    a->top_ = top;
    if (values.empty()) values.resize(a->carrier_.size());
    a->values_ = std::move(values);
    return a;
  }
};

Elem LatticeAlgebra::elem(const std::string& label) const {
  auto e = find_elem(label);
  if (!e) throw input_error("unknown carrier element: " + label);
  return *e;
}

std::optional<Elem> LatticeAlgebra::find_elem(const std::string& label) const {
  auto it = std::find(carrier_.begin(), carrier_.end(), label);
  if (it == carrier_.end()) return std::nullopt;
  return static_cast<Elem>(it - carrier_.begin());
}

const Operation& LatticeAlgebra::op(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw input_error("unknown connective: " + name);
  return it->second;
}

Elem LatticeAlgebra::apply(const std::string& name, std::span<const Elem> args) const {
  const Operation& o = op(name);
  if (static_cast<int>(args.size()) != o.arity)
    throw input_error("arity mismatch applying " + name);
  std::size_t idx = 0;
  for (Elem a : args) idx = idx * size() + a;
  return o.table[idx];
}

Elem LatticeAlgebra::apply1(const std::string& name, Elem a) const {
  Elem args[1] = {a};
  return apply(name, args);
}

Elem LatticeAlgebra::apply2(const std::string& name, Elem a, Elem b) const {
  Elem args[2] = {a, b};
  return apply(name, args);
}

Elem LatticeAlgebra::require_bottom() const {
  if (!bottom_) throw input_error("algebra has no declared bottom element");
  return *bottom_;
}

Elem LatticeAlgebra::require_top() const {
  if (!top_) throw input_error("algebra has no declared top element");
  return *top_;
}

std::string LatticeAlgebra::display(Elem a) const {
  if (values_[a]) return values_[a]->str();
  return carrier_[a];
}

std::vector<std::string> algebra_diagnostics(const AlgebraSpec& spec) {
  std::vector<std::string> out;
  const int n = static_cast<int>(spec.carrier.size());
  if (n == 0) {
    out.push_back("carrier is empty");
    return out;
  }
  {
    std::set<std::string> seen;
    for (const auto& l : spec.carrier)
      if (!seen.insert(l).second) out.push_back("duplicate carrier label: " + l);
  }
  for (const auto& [name, op] : spec.ops) {
    if (op.arity < 1 || op.arity > 3) {
      out.push_back("operation " + name + " has unsupported arity " + std::to_string(op.arity));
      continue;
    }
    std::uint64_t want = pow_u64(n, op.arity);
    if (op.table.size() != want) {
      out.push_back("operation " + name + " table is not total: has " +
                    std::to_string(op.table.size()) + " entries, needs " + std::to_string(want));
      continue;
    }
    for (Elem v : op.table)
      if (v < 0 || v >= n) {
        out.push_back("operation " + name + " table has out-of-carrier entry");
        break;
      }
  }
  auto find_bin = [&](const char* name) -> const Operation* {
    auto it = spec.ops.find(name);
    if (it == spec.ops.end()) {
      out.push_back(std::string("missing required operation: ") + name);
      return nullptr;
    }
    if (it->second.arity != 2 || it->second.table.size() != std::size_t(n) * n) return nullptr;
    return &it->second;
  };
  const Operation* meet = find_bin("and");
  const Operation* join = find_bin("or");
  if (!meet || !join) return out;
  auto m = [&](Elem a, Elem b) { return meet->table[a * n + b]; };
  auto j = [&](Elem a, Elem b) { return join->table[a * n + b]; };
  auto lbl = [&](Elem a) { return spec.carrier[a]; };

  for (Elem a = 0; a < n; ++a) {
    if (m(a, a) != a) out.push_back("meet not idempotent at (" + lbl(a) + ")");
    if (j(a, a) != a) out.push_back("join not idempotent at (" + lbl(a) + ")");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (m(a, b) != m(b, a))
        out.push_back("meet commutativity fails at (" + lbl(a) + "," + lbl(b) + ")");
      if (j(a, b) != j(b, a))
        out.push_back("join commutativity fails at (" + lbl(a) + "," + lbl(b) + ")");
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (m(a, j(a, b)) != a)
        out.push_back("absorption a&(a|b)=a fails at (" + lbl(a) + "," + lbl(b) + ")");
      if (j(a, m(a, b)) != a)
        out.push_back("absorption a|(a&b)=a fails at (" + lbl(a) + "," + lbl(b) + ")");
      for (Elem c = 0; c < n; ++c) {
        if (m(a, m(b, c)) != m(m(a, b), c))
          out.push_back("meet associativity fails at (" + lbl(a) + "," + lbl(b) + "," + lbl(c) + ")");
        if (j(a, j(b, c)) != j(j(a, b), c))
          out.push_back("join associativity fails at (" + lbl(a) + "," + lbl(b) + "," + lbl(c) + ")");
      }
    }
  auto check_bound = [&](const std::optional<std::string>& label, bool is_bottom) {
    if (!label) return;
    auto it = std::find(spec.carrier.begin(), spec.carrier.end(), *label);
    if (it == spec.carrier.end()) {
      out.push_back("declared " + std::string(is_bottom ? "bottom" : "top") +
                    " is not a carrier element: " + *label);
      return;
    }
    Elem e = static_cast<Elem>(it - spec.carrier.begin());
    for (Elem a = 0; a < n; ++a) {
      bool ok = is_bottom ? (m(e, a) == e) : (m(a, e) == a);
      if (!ok) {
        out.push_back("declared " + std::string(is_bottom ? "bottom" : "top") +
                      " is not extremal; witness " + lbl(a));
        return;
      }
    }
  };
  check_bound(spec.bottom, true);
  check_bound(spec.top, false);
  for (const auto& [label, v] : spec.values) {
    (void)v;
    if (std::find(spec.carrier.begin(), spec.carrier.end(), label) == spec.carrier.end())
      out.push_back("value annotation for unknown label: " + label);
  }
  return out;
}

AlgebraPtr validate_algebra(const AlgebraSpec& spec) {
  auto diags = algebra_diagnostics(spec);
  if (!diags.empty()) {
    std::ostringstream msg;
    msg << "invalid algebra:";
    for (const auto& d : diags) msg << "\n  " << d;
    throw input_error(msg.str());
  }
  std::optional<Elem> bottom, top;
  auto idx = [&](const std::string& l) {
    return static_cast<Elem>(std::find(spec.carrier.begin(), spec.carrier.end(), l) -
                             spec.carrier.begin());
  };
  if (spec.bottom) bottom = idx(*spec.bottom);
  if (spec.top) top = idx(*spec.top);
  std::vector<std::optional<Rational>> values(spec.carrier.size());
  for (const auto& [label, v] : spec.values) values[idx(label)] = v;
  return AlgebraBuilder::build(spec.carrier, spec.ops, bottom, top, std::move(values));
}

namespace {

// Fills binary op table from a callable on indices.
template <typename F>
Operation bin_op(int n, F f) {
  Operation op;
  op.arity = 2;
  op.table.resize(std::size_t(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) op.table[a * n + b] = f(a, b);
  return op;
}

template <typename F>
Operation un_op(int n, F f) {
  Operation op;
  op.arity = 1;
  op.table.resize(n);
  for (Elem a = 0; a < n; ++a) op.table[a] = f(a);
  return op;
}

}  // namespace

AlgebraPtr make_mv_chain(int n) {
  if (n < 1) throw input_error("MV chain requires N >= 1");
  const int size = n + 1;
  AlgebraSpec spec;
  for (int k = 0; k <= n; ++k) {
    Rational v(k, n);
    spec.carrier.push_back(v.str());
    spec.values[v.str()] = v;
  }
  // Element k stands for k/N; all operations are index arithmetic.
  spec.ops["and"] = bin_op(size, [](Elem a, Elem b) { return std::min(a, b); });
  spec.ops["or"] = bin_op(size, [](Elem a, Elem b) { return std::max(a, b); });
  spec.ops["not"] = un_op(size, [n](Elem a) { return n - a; });
  spec.ops["imp"] = bin_op(size, [n](Elem a, Elem b) { return std::min(n, n - a + b); });
  spec.ops["oplus"] = bin_op(size, [n](Elem a, Elem b) { return std::min(n, a + b); });
  spec.ops["odot"] = bin_op(size, [n](Elem a, Elem b) { return std::max(0, a + b - n); });
  spec.bottom = spec.carrier.front();
  spec.top = spec.carrier.back();
  return validate_algebra(spec);
}

AlgebraPtr make_boolean() { return make_mv_chain(1); }

AlgebraPtr make_godel_chain(const std::vector<std::string>& labels) {
  const int size = static_cast<int>(labels.size());
  if (size < 2) throw input_error("Goedel chain requires at least 2 elements");
  AlgebraSpec spec;
  spec.carrier = labels;
  spec.ops["and"] = bin_op(size, [](Elem a, Elem b) { return std::min(a, b); });
  spec.ops["or"] = bin_op(size, [](Elem a, Elem b) { return std::max(a, b); });
  spec.ops["imp"] = bin_op(size, [size](Elem a, Elem b) { return a <= b ? size - 1 : b; });
  spec.ops["not"] = un_op(size, [size](Elem a) { return a == 0 ? size - 1 : 0; });
  spec.bottom = labels.front();
  spec.top = labels.back();
  return validate_algebra(spec);
}

AlgebraPtr make_godel_chain(int n) {
  if (n < 1) throw input_error("Goedel chain requires N >= 1");
  std::vector<std::string> labels;
  labels.push_back("0");
  for (int k = 1; k < n; ++k) labels.push_back("g" + std::to_string(k));
  labels.push_back("1");
  return make_godel_chain(labels);
}

AlgebraPtr product(const LatticeAlgebra& a, const LatticeAlgebra& b) {
  // Signatures must coincide exactly.
  if (a.ops().size() != b.ops().size())
    throw input_error("product: signature mismatch");
  for (const auto& [name, op] : a.ops()) {
    if (!b.has_op(name) || b.op(name).arity != op.arity)
      throw input_error("product: signature mismatch at " + name);
  }
  const int na = a.size(), nb = b.size(), n = na * nb;
  AlgebraSpec spec;
  for (Elem i = 0; i < na; ++i)
    for (Elem j = 0; j < nb; ++j)
      spec.carrier.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  auto pack = [nb](Elem i, Elem j) { return i * nb + j; };
  for (const auto& [name, opa] : a.ops()) {
    const Operation& opb = b.op(name);
    Operation op;
    op.arity = opa.arity;
    op.table.resize(pow_u64(n, op.arity));
    std::vector<Elem> args(op.arity, 0);
    std::size_t idx = 0;
    // iterate all argument tuples in row-major order
    for (;;) {
      std::size_t ia = 0, ib = 0;
      for (Elem arg : args) {
        ia = ia * na + arg / nb;
        ib = ib * nb + arg % nb;
      }
      op.table[idx] = pack(opa.table[ia], opb.table[ib]);
      ++idx;
      int pos = op.arity - 1;
      while (pos >= 0 && ++args[pos] == n) args[pos--] = 0;
      if (pos < 0) break;
    }
    spec.ops[name] = std::move(op);
  }
  if (a.bottom() && b.bottom()) spec.bottom = spec.carrier[pack(*a.bottom(), *b.bottom())];
  if (a.top() && b.top()) spec.top = spec.carrier[pack(*a.top(), *b.top())];
  return validate_algebra(spec);
}

AlgebraPtr reduct(const LatticeAlgebra& a, const std::vector<std::string>& keep) {
  AlgebraSpec spec;
  spec.carrier = a.carrier();
  spec.ops["and"] = a.op("and");
  spec.ops["or"] = a.op("or");
  for (const auto& name : keep) {
    if (!a.has_op(name)) throw input_error("reduct: unknown connective " + name);
    spec.ops[name] = a.op(name);
  }
  if (a.bottom()) spec.bottom = a.label(*a.bottom());
  if (a.top()) spec.top = a.label(*a.top());
  for (Elem e = 0; e < a.size(); ++e)
    if (auto v = a.value(e)) spec.values[a.label(e)] = *v;
  return validate_algebra(spec);
}

AlgebraPtr algebra_by_name(const std::string& name) {
  if (name == "B2") return make_boolean();
  if (name.size() >= 2 && (name[0] == 'L' || name[0] == 'G')) {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
    if (digits) {
      int k = std::atoi(name.c_str() + 1);
      if (k < 2) throw input_error("chain algebra needs at least 2 elements: " + name);
      return name[0] == 'L' ? make_mv_chain(k - 1) : make_godel_chain(k - 1);
    }
  }
  if (name.rfind("prod(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(5, name.size() - 6);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      char c = inner[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        auto lhs = algebra_by_name(inner.substr(0, i));
        auto rhs = algebra_by_name(inner.substr(i + 1));
        // named products use the common signature, so that chains of
        // different families (MV vs Goedel) can still be multiplied
        std::vector<std::string> common;
        for (const auto& [op_name, op] : lhs->ops())
          if (rhs->has_op(op_name) && rhs->op(op_name).arity == op.arity)
            common.push_back(op_name);
        return product(*reduct(*lhs, common), *reduct(*rhs, common));
      }
    }
    throw input_error("malformed product name: " + name);
  }
  throw input_error("unknown algebra name: " + name);
}

}  // namespace mvlaw
