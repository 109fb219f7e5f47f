#include "cts/subalgebra.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cts {

bool GradedSubalgebra::insert(const VectorField& X) {
  if (X.is_zero()) return false;
  require_same_signature(sig_, X.signature(), "GradedSubalgebra::insert");
  auto deg = X.degree();
  auto par = X.parity();
  if (!deg || !par) throw std::invalid_argument("GradedSubalgebra::insert: field not degree/parity homogeneous");
  const Slice& sl = Slice::get(sig_, *deg);
  auto it = comps_.find(*deg);
  if (it == comps_.end()) it = comps_.emplace(*deg, EchelonSpan(sl.dim(), sig_->p())).first;
  return it->second.insert(sl.coords(X));
}

std::size_t GradedSubalgebra::component_dim(int k) const {
  auto it = comps_.find(k);
  return it == comps_.end() ? 0 : it->second.dim();
}

std::vector<int> GradedSubalgebra::degrees() const {
  std::vector<int> out;
  for (const auto& [k, sp] : comps_)
    if (sp.dim()) out.push_back(k);
  return out;
}

int GradedSubalgebra::min_degree() const {
  auto ds = degrees();
  if (ds.empty()) throw std::logic_error("GradedSubalgebra: empty algebra has no degrees");
  return ds.front();
}

int GradedSubalgebra::max_degree() const {
  auto ds = degrees();
  if (ds.empty()) throw std::logic_error("GradedSubalgebra: empty algebra has no degrees");
  return ds.back();
}

std::size_t GradedSubalgebra::dim() const {
  std::size_t n = 0;
  for (const auto& [k, sp] : comps_) n += sp.dim();
  return n;
}

std::pair<std::size_t, std::size_t> GradedSubalgebra::sdim() const {
  std::size_t ev = 0, od = 0;
  for (int k : degrees())
    for (const auto& X : basis(k))
      (*X.parity() ? od : ev) += 1;
  return {ev, od};
}

std::vector<VectorField> GradedSubalgebra::basis(int k) const {
  std::vector<VectorField> out;
  auto it = comps_.find(k);
  if (it == comps_.end()) return out;
  const Slice& sl = Slice::get(sig_, k);
  for (std::size_t i = 0; i < it->second.dim(); ++i)
    out.push_back(sl.field(sig_, it->second.basis_row(i)));
  return out;
}

std::vector<VectorField> GradedSubalgebra::flat_basis() const {
  std::vector<VectorField> out;
  for (int k : degrees())
    for (auto& X : basis(k)) out.push_back(std::move(X));
  return out;
}

const EchelonSpan* GradedSubalgebra::span(int k) const {
  auto it = comps_.find(k);
  return it == comps_.end() ? nullptr : &it->second;
}

bool GradedSubalgebra::contains(const VectorField& X) const {
  if (X.is_zero()) return true;
  auto deg = X.degree();
  if (!deg) {
    // reduce componentwise
    for (int k = -sig_->max_weight(); k <= sig_->top_degree(); ++k) {
      VectorField c = X.component(k);
      if (!c.is_zero() && !contains(c)) return false;
    }
    return true;
  }
  auto it = comps_.find(*deg);
  if (it == comps_.end()) return false;
  return it->second.contains(Slice::get(sig_, *deg).coords(X));
}

bool GradedSubalgebra::operator==(const GradedSubalgebra& o) const {
  auto a = degrees(), b = o.degrees();
  if (a != b) return false;
  for (int k : a)
    if (*span(k) != *o.span(k)) return false;
  return true;
}

bool GradedSubalgebra::contained_in(const GradedSubalgebra& o) const {
  for (int k : degrees()) {
    const EchelonSpan* mine = span(k);
    const EchelonSpan* theirs = o.span(k);
    if (!theirs) return false;
    for (std::size_t i = 0; i < mine->dim(); ++i)
      if (!theirs->contains(mine->basis_row(i))) return false;
  }
  return true;
}

Membership span_membership(const VectorField& X, const GradedSubalgebra& alg, int degree) {
  const Slice& sl = Slice::get(alg.signature(), degree);
  Membership out;
  std::vector<std::uint32_t> v;
  try {
    v = sl.coords(X);
  } catch (const std::invalid_argument&) {
    out.in_span = false;  // degree mismatch guard
    return out;
  }
  const EchelonSpan* sp = alg.span(degree);
  if (!sp) {
    out.residual = v;
    return out;
  }
  auto red = sp->reduce(std::move(v));
  out.in_span = red.in_span;
  out.coords = std::move(red.coords);
  out.residual = std::move(red.residual);
  return out;
}

GradedSubalgebra bracket_closure(const SigPtr& sig, const std::vector<VectorField>& generators) {
  GradedSubalgebra alg(sig);
  std::deque<VectorField> fresh;
  for (const auto& g : generators)
    if (alg.insert(g)) fresh.push_back(g);
  while (!fresh.empty()) {
    VectorField x = std::move(fresh.front());
    fresh.pop_front();
    for (int k : alg.degrees())
      for (const auto& y : alg.basis(k)) {
        VectorField b = bracket(x, y);
        if (!b.is_zero() && alg.insert(b)) fresh.push_back(std::move(b));
      }
  }
  return alg;
}

std::vector<StructureConstant> structure_constants(const GradedSubalgebra& alg) {
  std::vector<VectorField> basis = alg.flat_basis();
  std::vector<int> deg(basis.size());
  std::vector<std::size_t> offset_of_degree_start(basis.size());
  std::map<int, std::size_t> deg_offset;
  {
    std::size_t off = 0;
    for (int k : alg.degrees()) {
      deg_offset[k] = off;
      off += alg.component_dim(k);
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) deg[i] = *basis[i].degree();
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      VectorField b = bracket(basis[i], basis[j]);
      if (b.is_zero()) continue;
      int dk = deg[i] + deg[j];
      Membership m = span_membership(b, alg, dk);
      if (!m.in_span)
        throw std::domain_error("structure_constants: basis not closed, [e_" + std::to_string(i + 1) + ", e_" +
                                std::to_string(j + 1) + "] escapes degree " + std::to_string(dk));
      std::size_t base = deg_offset.at(dk);
      for (std::size_t r = 0; r < m.coords.size(); ++r)
        if (m.coords[r]) out.push_back(StructureConstant{i, j, base + r, m.coords[r]});
    }
  return out;
}

CoordAlgebra::CoordAlgebra(const GradedSubalgebra& alg)
    : p_(alg.signature()->p()), sig_(alg.signature()), basis_(alg.flat_basis()) {
  degrees_.resize(basis_.size());
  parities_.resize(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    degrees_[i] = *basis_[i].degree();
    parities_[i] = *basis_[i].parity();
  }
  const std::size_t n = basis_.size();
  table_.assign(n * n, {});
  auto consts = structure_constants(alg);
  for (auto& row : table_) row.assign(n, 0);
  for (const auto& sc : consts) {
    table_[sc.i * n + sc.j][sc.k] = sc.c;
    // super antisymmetry fills the lower triangle
    std::uint32_t c = sc.c;
    if (!(parities_[sc.i] & parities_[sc.j])) c = (p_ - c) % p_;
    table_[sc.j * n + sc.i][sc.k] = c;
  }
}

std::vector<std::uint32_t> CoordAlgebra::bracket_coords(const std::vector<std::uint32_t>& x,
                                                        const std::vector<std::uint32_t>& y) const {
  const std::size_t n = basis_.size();
  std::vector<std::uint32_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j]) continue;
      std::uint64_t f = (std::uint64_t{x[i]} * y[j]) % p_;
      const auto& row = table_[i * n + j];
      for (std::size_t k = 0; k < n; ++k)
        if (row[k]) out[k] = static_cast<std::uint32_t>((out[k] + f * row[k]) % p_);
    }
  }
  return out;
}

EchelonSpan CoordAlgebra::ideal_closure(const std::vector<std::vector<std::uint32_t>>& seed) const {
  const std::size_t n = basis_.size();
  EchelonSpan span(n, p_);
  std::deque<std::vector<std::uint32_t>> fresh;
  for (const auto& v : seed)
    if (span.insert(v)) fresh.push_back(v);
  std::vector<std::uint32_t> unit(n, 0);
  while (!fresh.empty()) {
    auto v = std::move(fresh.front());
    fresh.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      unit.assign(n, 0);
      unit[i] = 1;
      auto w = bracket_coords(unit, v);
      if (span.insert(w)) fresh.push_back(std::move(w));
    }
  }
  return span;
}

EchelonSpan CoordAlgebra::derived_span() const {
  const std::size_t n = basis_.size();
  EchelonSpan span(n, p_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) span.insert(table_[i * n + j]);
  return span;
}

EchelonSpan CoordAlgebra::center_span() const {
  const std::size_t n = basis_.size();
  FpMat A(n * n, n, p_);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = table_[i * n + j];  // [e_i, e_j]
      for (std::size_t k = 0; k < n; ++k) A.at(j * n + k, i) = row[k];
    }
  FpMat ker = A.kernel();
  EchelonSpan span(n, p_);
  for (std::size_t r = 0; r < ker.rows(); ++r) span.insert(ker.row_vec(r));
  return span;
}

bool CoordAlgebra::is_abelian() const {
  for (const auto& row : table_)
    for (auto v : row)
      if (v) return false;
  return true;
}

VectorField CoordAlgebra::field_from(const std::vector<std::uint32_t>& coords) const {
  VectorField X(sig_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) X += basis_[i].scaled(coords[i]);
  return X;
}

GradedSubalgebra CoordAlgebra::subalgebra_from(const EchelonSpan& span) const {
  GradedSubalgebra out(sig_);
  for (std::size_t r = 0; r < span.dim(); ++r) {
    VectorField X = field_from(span.basis_row(r));
    // rows may mix degrees; split into homogeneous pieces
    for (int k = degrees_.front(); k <= degrees_.back(); ++k) {
      VectorField c = X.component(k);
      if (!c.is_zero()) out.insert(c);
    }
  }
  return out;
}

std::map<Weight, std::vector<VectorField>> weight_decompose(const GradedSubalgebra& alg, int degree,
                                                            const std::vector<VectorField>& torus) {
  std::map<Weight, std::vector<VectorField>> out;
  const EchelonSpan* comp = alg.span(degree);
  if (!comp || comp->dim() == 0) return out;
  const SigPtr& sig = alg.signature();
  const std::uint32_t p = sig->p();
  const Slice& sl = Slice::get(sig, degree);
  auto fields = alg.basis(degree);
  const std::size_t n = fields.size();

  // pairwise commutation of the torus
  for (std::size_t a = 0; a < torus.size(); ++a)
    for (std::size_t b = a + 1; b < torus.size(); ++b)
      if (!bracket(torus[a], torus[b]).is_zero())
        throw std::invalid_argument("weight_decompose: torus elements do not commute");

  // ad matrices in component coordinates
  std::vector<FpMat> mats;
  for (std::size_t tindex = 0; tindex < torus.size(); ++tindex) {
    FpMat M(n, n, p);
    for (std::size_t c = 0; c < n; ++c) {
      VectorField img = bracket(torus[tindex], fields[c]);
      Membership m = span_membership(img, alg, degree);
      if (!m.in_span)
        throw std::invalid_argument("weight_decompose: torus element " + std::to_string(tindex) +
                                    " does not stabilize the component");
      for (std::size_t r = 0; r < n; ++r) M.at(r, c) = m.coords[r];
    }
    mats.push_back(std::move(M));
  }

  struct Group {
    Weight w;
    std::vector<std::vector<std::uint32_t>> vecs;  // in component coordinates
  };
  std::vector<Group> groups{{Weight{}, {}}};
  groups[0].vecs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = 1;
    groups[0].vecs.push_back(std::move(e));
  }
  for (std::size_t tindex = 0; tindex < torus.size(); ++tindex) {
    std::vector<Group> next;
    for (auto& g : groups) {
      std::size_t found = 0;
      for (std::uint32_t lam = 0; lam < p; ++lam) {
        // kernel of (M − λ) restricted to span(g.vecs)
        FpMat A(n, g.vecs.size(), p);
        for (std::size_t c = 0; c < g.vecs.size(); ++c) {
          for (std::size_t r = 0; r < n; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += std::uint64_t{mats[tindex].at(r, k)} * g.vecs[c][k];
            acc += std::uint64_t{p - lam} * g.vecs[c][r];
            A.at(r, c) = static_cast<std::uint32_t>(acc % p);
          }
        }
        FpMat ker = A.kernel();
        if (!ker.rows()) continue;
        Group ng;
        ng.w = g.w;
        ng.w.eigenvalues.push_back(lam);
        for (std::size_t r = 0; r < ker.rows(); ++r) {
          std::vector<std::uint32_t> v(n, 0);
          for (std::size_t c = 0; c < g.vecs.size(); ++c) {
            std::uint32_t f = ker.at(r, c);
            if (!f) continue;
            for (std::size_t k = 0; k < n; ++k)
              v[k] = static_cast<std::uint32_t>((v[k] + std::uint64_t{f} * g.vecs[c][k]) % p);
          }
          ng.vecs.push_back(std::move(v));
        }
        found += ng.vecs.size();
        next.push_back(std::move(ng));
      }
      if (found != g.vecs.size())
        throw std::domain_error("weight_decompose: torus element " + std::to_string(tindex) +
                                " is not diagonalizable on the component");
    }
    groups = std::move(next);
  }
  for (auto& g : groups) {
    EchelonSpan sp(n, p);
    for (auto& v : g.vecs) sp.insert(std::move(v));
    std::vector<VectorField> fs;
    for (std::size_t r = 0; r < sp.dim(); ++r) {
      VectorField X(sig);
      for (std::size_t c = 0; c < n; ++c)
        if (sp.basis_row(r)[c]) X += fields[c].scaled(sp.basis_row(r)[c]);
      fs.push_back(std::move(X));
    }
    out.emplace(std::move(g.w), std::move(fs));
  }
  (void)sl;
  return out;
}

namespace {

/// Normalizes a field so its leading canonical slice coordinate is 1.
VectorField normalize_leading(const SigPtr& sig, int degree, const VectorField& X) {
  const Slice& sl = Slice::get(sig, degree);
  auto v = sl.coords(X);
  for (auto c : v)
    if (c) {
      std::uint64_t inv = 1, base = c, e = sig->p() - 2;
      while (e) {
        if (e & 1) inv = (inv * base) % sig->p();
        base = (base * base) % sig->p();
        e >>= 1;
      }
      return X.scaled(static_cast<std::uint32_t>(inv));
    }
  return X;
}

}  // namespace

std::vector<VectorField> singular_vectors(const GradedSubalgebra& alg, int degree,
                                          const std::vector<VectorField>& border) {
  std::vector<VectorField> out;
  auto fields = alg.basis(degree);
  if (fields.empty()) return out;
  const SigPtr& sig = alg.signature();
  const std::uint32_t p = sig->p();
  const std::size_t n = fields.size();
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& b : border) {
    auto bdeg = b.degree();
    if (!bdeg) throw std::invalid_argument("singular_vectors: border element not homogeneous");
    const Slice& target = Slice::get(sig, degree + *bdeg);
    std::vector<std::vector<std::uint32_t>> cols;
    cols.reserve(n);
    for (const auto& e : fields) cols.push_back(target.coords(bracket(b, e)));
    for (std::size_t r = 0; r < target.dim(); ++r) {
      std::vector<std::uint32_t> row(n, 0);
      bool nz = false;
      for (std::size_t c = 0; c < n; ++c) {
        row[c] = cols[c][r];
        nz = nz || row[c];
      }
      if (nz) rows.push_back(std::move(row));
    }
  }
  FpMat A(0, n, p);
  for (auto& r : rows) A.append_row(r);
  FpMat ker = A.rows() ? A.kernel() : [&] {
    FpMat id(n, n, p);
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = 1;
    return id;
  }();
  EchelonSpan sp(n, p);
  for (std::size_t r = 0; r < ker.rows(); ++r) sp.insert(ker.row_vec(r));
  for (std::size_t r = 0; r < sp.dim(); ++r) {
    VectorField X(sig);
    for (std::size_t c = 0; c < n; ++c)
      if (sp.basis_row(r)[c]) X += fields[c].scaled(sp.basis_row(r)[c]);
    out.push_back(normalize_leading(sig, degree, X));
  }
  return out;
}

ModuleDecomposition decompose_module(const GradedSubalgebra& alg, int degree,
                                     const std::vector<VectorField>& acting,
                                     const std::vector<VectorField>& border) {
  ModuleDecomposition out;
  const SigPtr& sig = alg.signature();
  const Slice& sl = Slice::get(sig, degree);
  auto sing = singular_vectors(alg, degree, border);
  EchelonSpan total(sl.dim(), sig->p());
  std::size_t dim_sum = 0;
  for (const auto& v : sing) {
    ModuleSummand summand;
    summand.lowest_weight = v;
    EchelonSpan sp(sl.dim(), sig->p());
    std::deque<VectorField> fresh;
    sp.insert(sl.coords(v));
    fresh.push_back(v);
    while (!fresh.empty()) {
      VectorField x = std::move(fresh.front());
      fresh.pop_front();
      for (const auto& a : acting) {
        VectorField img = bracket(a, x);
        if (img.is_zero()) continue;
        if (img.degree() != degree)
          throw std::invalid_argument("decompose_module: acting algebra does not preserve the component");
        if (sp.insert(sl.coords(img))) fresh.push_back(std::move(img));
      }
    }
    for (std::size_t r = 0; r < sp.dim(); ++r) summand.basis.push_back(sl.field(sig, sp.basis_row(r)));
    summand.parity = summand.basis.empty() ? 0 : *summand.basis.front().parity();
    dim_sum += sp.dim();
    for (std::size_t r = 0; r < sp.dim(); ++r) total.insert(sp.basis_row(r));
    out.summands.push_back(std::move(summand));
  }
  out.direct_sum = (dim_sum == total.dim()) && (total.dim() == alg.component_dim(degree));
  return out;
}

std::vector<VectorField> center(const GradedSubalgebra& alg) {
  std::vector<VectorField> out;
  if (alg.dim() == 0) return out;
  CoordAlgebra ca(alg);
  EchelonSpan z = ca.center_span();
  for (std::size_t r = 0; r < z.dim(); ++r) out.push_back(ca.field_from(z.basis_row(r)));
  return out;
}

GradedSubalgebra derived_subalgebra(const GradedSubalgebra& alg) {
  if (alg.dim() == 0) return GradedSubalgebra(alg.signature());
  CoordAlgebra ca(alg);
  return ca.subalgebra_from(ca.derived_span());
}

namespace {

/// span{[x, y] : x ∈ A-basis, y ∈ B-basis} equals the degree-k component?
bool brackets_fill(const GradedSubalgebra& alg, int ka, int kb) {
  const SigPtr& sig = alg.signature();
  int kt = ka + kb;
  const Slice& sl = Slice::get(sig, kt);
  EchelonSpan sp(sl.dim(), sig->p());
  for (const auto& x : alg.basis(ka))
    for (const auto& y : alg.basis(kb)) {
      VectorField b = bracket(x, y);
      if (!b.is_zero()) sp.insert(sl.coords(b));
    }
  const EchelonSpan* target = alg.span(kt);
  std::size_t want = target ? target->dim() : 0;
  if (sp.dim() != want) return false;
  for (std::size_t r = 0; r < sp.dim(); ++r)
    if (!target->contains(sp.basis_row(r))) return false;
  return true;
}

}  // namespace

SimplicityChecklist is_simple_criterion(const GradedSubalgebra& alg,
                                        const std::vector<VectorField>& border_neg,
                                        const std::vector<VectorField>& border_pos) {
  (void)border_pos;
  SimplicityChecklist out;
  if (alg.dim() == 0) return out;
  int lo = alg.min_degree(), hi = alg.max_degree();
  // (a) g_{-1} irreducible over g_0
  if (alg.component_dim(-1)) {
    auto dec = decompose_module(alg, -1, alg.basis(0), border_neg);
    out.neg1_irreducible = dec.summands.size() == 1 && dec.direct_sum;
  }
  // (b) negative part generated by g_{-1}
  out.neg_generated = true;
  for (int k = lo; k <= -2; ++k)
    if (alg.component_dim(k) && !brackets_fill(alg, -1, k + 1)) out.neg_generated = false;
  // (c) [g_1, g_{-1}] = g_0
  out.bracket_onto_g0 = alg.component_dim(1) && brackets_fill(alg, 1, -1);
  // (d) positive part generated by g_1
  out.pos_generated = hi >= 1;
  for (int k = 1; k < hi; ++k)
    if (!brackets_fill(alg, 1, k)) out.pos_generated = false;
  // (e) transitivity
  out.transitive = true;
  auto gm1 = alg.basis(-1);
  for (int k = 0; k <= hi; ++k) {
    if (!alg.component_dim(k)) continue;
    if (!singular_vectors(alg, k, gm1).empty()) out.transitive = false;
  }
  return out;
}

bool is_simple_bruteforce(const GradedSubalgebra& alg, std::size_t cap) {
  if (alg.dim() > cap)
    throw std::invalid_argument("is_simple_bruteforce: dimension " + std::to_string(alg.dim()) +
                                " exceeds cap " + std::to_string(cap));
  if (alg.dim() == 0) return false;
  CoordAlgebra ca(alg);
  if (ca.is_abelian()) return false;
  const std::size_t n = ca.dim();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = 1;
    if (ca.ideal_closure({e}).dim() != n) return false;
  }
  return true;
}

GradedSubalgebra simple_ideal(const GradedSubalgebra& alg,
                              const std::vector<VectorField>* border_neg,
                              const std::vector<VectorField>* border_pos) {
  CoordAlgebra ca(alg);
  const std::size_t n = ca.dim();
  // seed: the whole negative part
  std::vector<std::vector<std::uint32_t>> seed;
  for (std::size_t i = 0; i < n; ++i)
    if (ca.degree(i) < 0) {
      std::vector<std::uint32_t> e(n, 0);
      e[i] = 1;
      seed.push_back(std::move(e));
    }
  EchelonSpan ideal = ca.ideal_closure(seed);
  GradedSubalgebra result = ca.subalgebra_from(ideal);
  // derived passes until stable
  while (true) {
    GradedSubalgebra der = derived_subalgebra(result);
    if (der.dim() == result.dim()) break;
    result = std::move(der);
  }
  bool ok = is_simple_bruteforce(result);
  if (ok && border_neg && border_pos) {
    auto check = is_simple_criterion(result, *border_neg, *border_pos);
    ok = check.simple();
  }
  if (!ok) throw std::domain_error("simple_ideal: extracted algebra is not simple (dim " +
                                   std::to_string(result.dim()) + ")");
  return result;
}

}  // namespace cts
