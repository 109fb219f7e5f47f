#include "cts/element.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace cts {

std::vector<Monomial> graded_monomials(const Signature& sig, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  // enumerate odd subsets, then even exponent tuples filling the remainder
  const std::uint32_t n = sig.odd_count(), m = sig.even_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int rem0 = d;
    for (std::uint32_t j = 0; j < n; ++j)
      if ((mask >> j) & 1u) rem0 -= sig.weight(m + j);
    if (rem0 < 0) continue;
    // recursive fill of even exponents
    Monomial cur;
    cur.odd = mask;
    auto rec = [&](auto&& self, std::uint32_t i, int rem) -> void {
      if (i == m) {
        if (rem == 0) out.push_back(cur);
        return;
      }
      int w = sig.weight(i);
      for (std::uint32_t e = 0; e <= sig.cap(i) && int(e) * w <= rem; ++e) {
        cur.ev[i] = static_cast<std::uint8_t>(e);
        self(self, i + 1, rem - int(e) * w);
      }
      cur.ev[i] = 0;
    };
    rec(rec, 0, rem0);
  }
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return canon_less(sig, a, b); });
  return out;
}

std::vector<std::uint64_t> graded_dimension(const Signature& sig) {
  std::vector<std::uint64_t> h(static_cast<std::size_t>(sig.top_degree()) + 1, 0);
  h[0] = 1;
  auto mul_factor = [&](int w, std::uint32_t emax) {
    std::vector<std::uint64_t> g(h.size(), 0);
    for (std::size_t d = 0; d < h.size(); ++d) {
      if (!h[d]) continue;
      for (std::uint32_t e = 0; e <= emax && d + std::size_t(e) * w < g.size() + 1; ++e) {
        std::size_t t = d + std::size_t(e) * w;
        if (t < g.size()) g[t] += h[d];
      }
    }
    h = std::move(g);
  };
  for (std::uint32_t i = 0; i < sig.even_count(); ++i) mul_factor(sig.weight(i), sig.cap(i));
  for (std::uint32_t j = 0; j < sig.odd_count(); ++j) mul_factor(sig.weight(sig.even_count() + j), 1);
  return h;
}

std::uint32_t DPElement::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.m < k; });
  if (it != terms_.end() && it->m == m) return it->c;
  return 0;
}

void DPElement::add_term(const Monomial& m, std::uint32_t c) {
  c %= sig_->p();
  if (!c) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.m < k; });
  if (it != terms_.end() && it->m == m) {
    it->c = (it->c + c) % sig_->p();
    if (!it->c) terms_.erase(it);
  } else {
    terms_.insert(it, Term{m, c});
  }
}

DPElement DPElement::operator+(const DPElement& g) const {
  require_same_signature(sig_, g.sig_, "DPElement::operator+");
  DPElement r(sig_);
  const std::uint32_t p = sig_->p();
  auto a = terms_.begin(), b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.end() && a->m < b->m)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->m < a->m) {
      r.terms_.push_back(*b++);
    } else {
      std::uint32_t c = (a->c + b->c) % p;
      if (c) r.terms_.push_back(Term{a->m, c});
      ++a;
      ++b;
    }
  }
  return r;
}

DPElement DPElement::operator-(const DPElement& g) const { return *this + g.scaled(sig_->p() - 1); }

DPElement DPElement::scaled(std::uint32_t c) const {
  DPElement r(sig_);
  c %= sig_->p();
  if (!c) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::uint32_t v = static_cast<std::uint32_t>((std::uint64_t{t.c} * c) % sig_->p());
    r.terms_.push_back(Term{t.m, v});
  }
  return r;
}

bool DPElement::operator==(const DPElement& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != g.terms_[i].m || terms_[i].c != g.terms_[i].c) return false;
  return true;
}

std::optional<int> DPElement::degree() const {
  if (is_zero()) return std::nullopt;
  int d = terms_[0].m.degree(*sig_);
  for (const Term& t : terms_)
    if (t.m.degree(*sig_) != d) return std::nullopt;
  return d;
}

std::optional<std::uint32_t> DPElement::parity() const {
  if (is_zero()) return std::nullopt;
  std::uint32_t pa = terms_[0].m.parity();
  for (const Term& t : terms_)
    if (t.m.parity() != pa) return std::nullopt;
  return pa;
}

DPElement DPElement::component(int d) const {
  DPElement r(sig_);
  for (const Term& t : terms_)
    if (t.m.degree(*sig_) == d) r.terms_.push_back(t);
  return r;
}

std::string DPElement::render() const {
  if (is_zero()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const Term& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](const Term* a, const Term* b) { return canon_less(*sig_, a->m, b->m); });
  std::string s;
  for (const Term* t : order) {
    if (!s.empty()) s += " + ";
    std::string mono = t->m.render(*sig_);
    if (t->c != 1) {
      s += std::to_string(t->c);
      if (mono != "1") s += ' ' + mono;
    } else {
      s += mono;
    }
  }
  return s;
}

std::pair<std::uint32_t, Monomial> mono_mul(const Signature& sig, const Monomial& a, const Monomial& b) {
  Monomial r;
  if (a.odd & b.odd) return {0, r};  // odd square
  std::uint64_t c = 1;
  const std::uint32_t p = sig.p();
  for (std::uint32_t i = 0; i < sig.even_count(); ++i) {
    std::uint32_t s = std::uint32_t(a.ev[i]) + b.ev[i];
    c = (c * lucas_binom(s, a.ev[i], p)) % p;
    if (!c) return {0, r};
    // nonzero Lucas coefficient implies no base-p carry, so s <= cap
    r.ev[i] = static_cast<std::uint8_t>(s);
  }
  // Koszul sign: count inversions between a's and b's odd factors
  std::uint32_t inv = 0;
  std::uint32_t bits = b.odd;
  while (bits) {
    std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(bits));
    inv += static_cast<std::uint32_t>(std::popcount(a.odd >> (j + 1)));
    bits &= bits - 1;
  }
  if (inv & 1) c = p - c;
  r.odd = a.odd | b.odd;
  return {static_cast<std::uint32_t>(c), r};
}

DPElement dp_mul(const DPElement& f, const DPElement& g) {
  require_same_signature(f.signature(), g.signature(), "dp_mul");
  DPElement r(f.signature());
  const Signature& sig = *f.signature();
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) {
      auto [c, m] = mono_mul(sig, a.m, b.m);
      if (!c) continue;
      std::uint64_t v = (std::uint64_t{a.c} * b.c) % sig.p();
      v = (v * c) % sig.p();
      r.add_term(m, static_cast<std::uint32_t>(v));
    }
  return r;
}

DPElement special_derive(std::uint32_t i, const DPElement& f) {
  const SigPtr& sig = f.signature();
  if (i >= sig->count()) throw std::invalid_argument("special_derive: index out of range");
  DPElement r(sig);
  const std::uint32_t p = sig->p();
  for (const auto& t : f.terms()) {
    Monomial m = t.m;
    std::uint32_t c = t.c;
    if (sig->is_odd_index(i)) {
      std::uint32_t j = i - sig->even_count();
      if (!((m.odd >> j) & 1u)) continue;
      // odd ∂ passes the odd factors with smaller index
      std::uint32_t before = static_cast<std::uint32_t>(std::popcount(m.odd & ((1u << j) - 1u)));
      if (before & 1) c = p - c;
      m.odd &= ~(1u << j);
    } else {
      if (m.ev[i] == 0) continue;
      m.ev[i] -= 1;  // ∂(u^{(k)}) = u^{(k-1)}, coefficient 1
    }
    r.add_term(m, c);
  }
  return r;
}

namespace {

struct Tok {
  int sign = 1;
  std::uint32_t coeff = 1;
  bool has_coeff = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (index, exponent)
};

}  // namespace

DPElement parse_element(const SigPtr& sig, const std::string& text) {
  DPElement total(sig);
  const std::uint32_t p = sig->p();
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    Tok tok;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      tok.sign = -1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("parse_element: expected '+' or '-' near: " + text.substr(i));
    }
    first = false;
    skip_ws();
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      tok.coeff = static_cast<std::uint32_t>(v % p);
      tok.has_coeff = true;
    }
    while (true) {
      skip_ws();
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      if (!std::isalpha(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_element: unexpected character near: " + text.substr(i));
      std::size_t start = i;
      ++i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])))) ++i;
      std::string name = text.substr(start, i - start);
      int idx = sig->index_of(name);
      if (idx < 0) throw std::invalid_argument("parse_element: unknown indeterminate '" + name + "'");
      std::uint32_t e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool paren = i < text.size() && text[i] == '(';
        if (paren) ++i;
        std::uint64_t v = 0;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw std::invalid_argument("parse_element: malformed exponent");
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        if (paren) {
          if (i >= text.size() || text[i] != ')') throw std::invalid_argument("parse_element: missing ')'");
          ++i;
        }
        e = static_cast<std::uint32_t>(v);
      }
      tok.factors.emplace_back(static_cast<std::uint32_t>(idx), e);
    }
    if (tok.factors.empty() && !tok.has_coeff)
      throw std::invalid_argument("parse_element: empty term");
    DPElement term = DPElement::one(sig).scaled(tok.sign < 0 ? p - tok.coeff : tok.coeff);
    for (auto [idx, e] : tok.factors) {
      if (sig->is_odd_index(idx)) {
        if (e != 1) throw std::invalid_argument("parse_element: odd exponent must be 1");
        term = dp_mul(term, DPElement::generator(sig, idx));
      } else {
        // name^(k) denotes the divided-power basis monomial u^{(k)}
        if (e > sig->cap(idx)) throw std::invalid_argument("parse_element: exponent exceeds p^N-1");
        Monomial m;
        m.ev[idx] = static_cast<std::uint8_t>(e);
        term = dp_mul(term, DPElement(sig, m, 1));
      }
    }
    total += term;
  }
  return total;
}

}  // namespace cts
