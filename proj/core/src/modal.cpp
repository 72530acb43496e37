#include "mvlaw/modal.hpp"

#include <algorithm>
#include <cctype>

namespace mvlaw {

ModalPtr ModalFormula::prop_letter(std::string name) {
  auto m = std::make_shared<ModalFormula>();
  m->kind = Kind::Prop;
  m->prop = std::move(name);
  return m;
}

ModalPtr ModalFormula::connective(std::string name, std::vector<ModalPtr> children) {
  auto m = std::make_shared<ModalFormula>();
  m->kind = Kind::Conn;
  m->conn = std::move(name);
  m->children = std::move(children);
  return m;
}

ModalPtr ModalFormula::box(ModalPtr child) {
  auto m = std::make_shared<ModalFormula>();
  m->kind = Kind::Box;
  m->children = {std::move(child)};
  return m;
}

ModalPtr ModalFormula::diamond(ModalPtr child) {
  auto m = std::make_shared<ModalFormula>();
  m->kind = Kind::Diamond;
  m->children = {std::move(child)};
  return m;
}

namespace {

bool all_under_modality(const ModalFormula& m, bool guarded) {
  switch (m.kind) {
    case ModalFormula::Kind::Prop:
      return guarded;
    case ModalFormula::Kind::Conn: {
      for (const auto& c : m.children)
        if (!all_under_modality(*c, guarded)) return false;
      return true;
    }
    case ModalFormula::Kind::Box:
    case ModalFormula::Kind::Diamond:
      return all_under_modality(*m.children[0], true);
  }
  return false;
}

// The translation uses one world variable; each modality rebinds it.
const char* kWorld = "w";

// p_i maps to the unary predicate P_i.
std::string pred_name(const std::string& prop) {
  std::string s = prop;
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

FormulaPtr translate(const ModalFormula& m) {
  switch (m.kind) {
    case ModalFormula::Kind::Prop:
      return Formula::atom(pred_name(m.prop), {kWorld});
    case ModalFormula::Kind::Conn: {
      std::vector<FormulaPtr> children;
      children.reserve(m.children.size());
      for (const auto& c : m.children) children.push_back(translate(*c));
      return Formula::connective(m.conn, std::move(children));
    }
    case ModalFormula::Kind::Box:
      return Formula::quant(true, kWorld, translate(*m.children[0]));
    case ModalFormula::Kind::Diamond:
      return Formula::quant(false, kWorld, translate(*m.children[0]));
  }
  return nullptr;
}

void collect_props(const ModalFormula& m, std::vector<std::string>& out) {
  if (m.kind == ModalFormula::Kind::Prop) {
    if (std::find(out.begin(), out.end(), m.prop) == out.end()) out.push_back(m.prop);
    return;
  }
  for (const auto& c : m.children) collect_props(*c, out);
}

}  // namespace

bool fully_modal(const ModalFormula& m) { return all_under_modality(m, false); }

FormulaPtr s5_translate(const ModalFormula& m) { return translate(m); }

Vocabulary s5_vocabulary(const ModalFormula& m) {
  Vocabulary v;
  std::vector<std::string> props;
  collect_props(m, props);
  for (const auto& p : props) v.relations.push_back({pred_name(p), 1});
  return v;
}

}  // namespace mvlaw
