#include "cts/vfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace cts {

VectorField VectorField::operator+(const VectorField& Y) const {
  require_same_signature(sig_, Y.sig_, "VectorField::operator+");
  VectorField r(sig_);
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] + Y.comps_[i];
  return r;
}

VectorField VectorField::operator-(const VectorField& Y) const {
  return *this + Y.scaled(sig_->p() - 1);
}

VectorField VectorField::scaled(std::uint32_t c) const {
  VectorField r(sig_);
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i].scaled(c);
  return r;
}

bool VectorField::operator==(const VectorField& Y) const {
  if (!sig_ || !Y.sig_) return is_zero() && Y.is_zero();
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i] != Y.comps_[i]) return false;
  return true;
}

std::optional<std::uint32_t> VectorField::parity() const {
  std::optional<std::uint32_t> pa;
  for (std::uint32_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    auto pf = comps_[i].parity();
    if (!pf) return std::nullopt;
    std::uint32_t pi = sig_->is_odd_index(i) ? 1u : 0u;
    std::uint32_t px = (*pf + pi) & 1u;
    if (pa && *pa != px) return std::nullopt;
    pa = px;
  }
  return pa;
}

std::optional<int> VectorField::degree() const {
  std::optional<int> deg;
  for (std::uint32_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    auto df = comps_[i].degree();
    if (!df) return std::nullopt;
    int dx = *df - sig_->weight(i);
    if (deg && *deg != dx) return std::nullopt;
    deg = dx;
  }
  return deg;
}

bool VectorField::is_homogeneous() const {
  return is_zero() || (degree().has_value() && parity().has_value());
}

VectorField VectorField::component(int k) const {
  VectorField r(sig_);
  for (std::uint32_t i = 0; i < comps_.size(); ++i)
    r.comps_[i] = comps_[i].component(k + sig_->weight(i));
  return r;
}

std::string VectorField::render() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::uint32_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    std::vector<const DPElement::Term*> order;
    for (const auto& t : comps_[i].terms()) order.push_back(&t);
    std::sort(order.begin(), order.end(), [&](const DPElement::Term* a, const DPElement::Term* b) {
      return canon_less(*sig_, a->m, b->m);
    });
    for (const auto* t : order) {
      if (!s.empty()) s += " + ";
      std::string mono = t->m.render(*sig_);
      if (t->c != 1) s += std::to_string(t->c) + ' ';
      if (mono != "1") s += mono + ' ';
      s += "d/d" + sig_->name(i);
    }
  }
  return s;
}

DPElement apply(const VectorField& X, const DPElement& f) {
  require_same_signature(X.signature(), f.signature(), "apply");
  DPElement r(f.signature());
  for (std::uint32_t i = 0; i < X.signature()->count(); ++i) {
    if (X.coefficient(i).is_zero()) continue;
    r += dp_mul(X.coefficient(i), special_derive(i, f));
  }
  return r;
}

VectorField bracket(const VectorField& X, const VectorField& Y) {
  require_same_signature(X.signature(), Y.signature(), "bracket");
  auto px = X.parity(), py = Y.parity();
  if (!X.is_zero() && !px) throw std::invalid_argument("bracket: X not parity-homogeneous");
  if (!Y.is_zero() && !py) throw std::invalid_argument("bracket: Y not parity-homogeneous");
  const SigPtr& sig = X.signature();
  VectorField r(sig);
  bool odd_pair = px && py && (*px & *py & 1u);
  for (std::uint32_t j = 0; j < sig->count(); ++j) {
    DPElement t = apply(X, Y.coefficient(j));
    DPElement s = apply(Y, X.coefficient(j));
    r.coefficient(j) = odd_pair ? t + s : t - s;
  }
  return r;
}

std::vector<SliceEntry> field_slice_entries(const Signature& sig, int k) {
  std::vector<SliceEntry> out;
  for (std::uint32_t i = 0; i < sig.count(); ++i) {
    auto monos = graded_monomials(sig, k + sig.weight(i));
    for (const auto& m : monos) out.push_back(SliceEntry{m, i});
  }
  return out;
}

std::vector<VectorField> field_basis(const SigPtr& sig, int k) {
  std::vector<VectorField> out;
  for (const auto& e : field_slice_entries(*sig, k))
    out.push_back(VectorField::monomial_field(sig, DPElement(sig, e.m, 1), e.dir));
  return out;
}

VectorField parse_field(const SigPtr& sig, const std::string& text) {
  VectorField X(sig);
  if (text == "0") return X;
  // split on top-level '+'/'-' boundaries, reusing the element parser per term
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+') ++i;
    else if (text[i] == '-') { sign = -1; ++i; }
    std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
    std::string term = text.substr(start, i - start);
    auto pos = term.find("d/d");
    if (pos == std::string::npos) throw std::invalid_argument("parse_field: term lacks d/d<name>: " + term);
    std::string head = term.substr(0, pos);
    std::string name = term.substr(pos + 3);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    int dir = sig->index_of(name);
    if (dir < 0) throw std::invalid_argument("parse_field: unknown direction '" + name + "'");
    bool blank = true;
    for (char c : head)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    DPElement f = blank ? DPElement::one(sig) : parse_element(sig, head);
    if (sign < 0) f = -f;
    X.coefficient(static_cast<std::uint32_t>(dir)) += f;
  }
  return X;
}

}  // namespace cts
