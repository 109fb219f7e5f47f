#include "cts/prolong.hpp"

#include <stdexcept>

namespace cts {

int default_degree_cap(const Signature& sig) {
  // maximal generating-function degree minus 2 under the contact grading
  return sig.top_degree() - 2;
}

namespace {

void verify_problem(const ProlongProblem& problem) {
  const GradedSubalgebra& g = problem.nonpos;
  if (g.dim() == 0) throw std::invalid_argument("cts_prolong: empty non-positive part");
  int lo = g.min_degree();
  if (g.max_degree() > 0) throw std::invalid_argument("cts_prolong: components of positive degree in input");
  // g_0 ⊆ der_0(g_-)
  for (const auto& x : g.basis(0))
    for (int k = lo; k < 0; ++k)
      for (const auto& y : g.basis(k)) {
        VectorField b = bracket(x, y);
        if (!b.is_zero() && !span_membership(b, g, k).in_span)
          throw std::invalid_argument("cts_prolong: [g_0, g_" + std::to_string(k) + "] escapes g_" + std::to_string(k));
      }
  // g_- generated by g_{-1}
  for (int k = lo; k <= -2; ++k) {
    const SigPtr& sig = g.signature();
    const Slice& sl = Slice::get(sig, k);
    EchelonSpan sp(sl.dim(), sig->p());
    for (const auto& x : g.basis(-1))
      for (const auto& y : g.basis(k + 1)) {
        VectorField b = bracket(x, y);
        if (!b.is_zero()) sp.insert(sl.coords(b));
      }
    if (sp.dim() != g.component_dim(k))
      throw std::invalid_argument("cts_prolong: g_- not generated by g_{-1} at degree " + std::to_string(k));
  }
}

/// Solves the membership system on a set of candidate slice vectors
/// (columns); returns the kernel lifted to slice coordinates.
EchelonSpan solve_block(const SigPtr& sig, const std::vector<VectorField>& g_minus1,
                        const EchelonSpan* target, int k,
                        const std::vector<std::vector<std::uint32_t>>& columns) {
  const std::uint32_t p = sig->p();
  const Slice& sk = Slice::get(sig, k);
  const Slice& sk1 = Slice::get(sig, k - 1);
  EchelonSpan out(sk.dim(), p);
  if (columns.empty()) return out;

  // rows: residual of [e, Y] after reduction mod the target component
  std::vector<std::vector<std::uint32_t>> rows(0);
  std::vector<std::vector<std::uint32_t>> residuals;  // per column, concatenated
  residuals.reserve(columns.size());
  for (const auto& col : columns) {
    VectorField X = sk.field(sig, col);
    std::vector<std::uint32_t> res;
    res.reserve(g_minus1.size() * sk1.dim());
    for (const auto& y : g_minus1) {
      VectorField b = bracket(X, y);
      auto v = sk1.coords(b);
      if (target) v = target->reduce(std::move(v)).residual;
      res.insert(res.end(), v.begin(), v.end());
    }
    residuals.push_back(std::move(res));
  }
  std::size_t nrows = residuals.front().size();
  FpMat A(0, columns.size(), p);
  for (std::size_t r = 0; r < nrows; ++r) {
    std::vector<std::uint32_t> row(columns.size(), 0);
    bool nz = false;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      row[c] = residuals[c][r];
      nz = nz || row[c];
    }
    if (nz) A.append_row(row);
  }
  FpMat ker = A.rows() ? A.kernel() : [&] {
    FpMat id(columns.size(), columns.size(), p);
    for (std::size_t i = 0; i < columns.size(); ++i) id.at(i, i) = 1;
    return id;
  }();
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    std::vector<std::uint32_t> v(sk.dim(), 0);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::uint32_t f = ker.at(r, c);
      if (!f) continue;
      for (std::size_t i = 0; i < sk.dim(); ++i)
        v[i] = static_cast<std::uint32_t>((v[i] + std::uint64_t{f} * columns[c][i]) % p);
    }
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace

EchelonSpan prolong_step(const SigPtr& sig, const std::vector<VectorField>& g_minus1,
                         const EchelonSpan* target, int k, const std::vector<VectorField>* torus) {
  const std::uint32_t p = sig->p();
  const Slice& sk = Slice::get(sig, k);
  std::vector<std::vector<std::uint32_t>> columns;
  columns.reserve(sk.dim());
  for (std::size_t i = 0; i < sk.dim(); ++i) {
    std::vector<std::uint32_t> e(sk.dim(), 0);
    e[i] = 1;
    columns.push_back(std::move(e));
  }
  if (!torus || torus->empty()) return solve_block(sig, g_minus1, target, k, columns);

  // split the ambient slice into simultaneous eigenspaces of ad(torus);
  // fall back to the plain solve when the action is not split
  std::vector<FpMat> mats;
  for (const auto& T : *torus) {
    FpMat M(sk.dim(), sk.dim(), p);
    for (std::size_t c = 0; c < sk.dim(); ++c) {
      VectorField e = sk.field(sig, columns[c]);
      VectorField img = bracket(T, e);
      auto v = sk.coords(img);
      for (std::size_t r = 0; r < sk.dim(); ++r) M.at(r, c) = v[r];
    }
    mats.push_back(std::move(M));
  }
  std::vector<std::vector<std::vector<std::uint32_t>>> blocks{columns};
  for (const auto& M : mats) {
    std::vector<std::vector<std::vector<std::uint32_t>>> next;
    std::size_t covered = 0;
    for (const auto& blk : blocks) {
      for (std::uint32_t lam = 0; lam < p; ++lam) {
        FpMat A(sk.dim(), blk.size(), p);
        for (std::size_t c = 0; c < blk.size(); ++c)
          for (std::size_t r = 0; r < sk.dim(); ++r) {
            std::uint64_t acc = std::uint64_t{p - lam} * blk[c][r];
            for (std::size_t t = 0; t < sk.dim(); ++t)
              if (blk[c][t]) acc += std::uint64_t{M.at(r, t)} * blk[c][t];
            A.at(r, c) = static_cast<std::uint32_t>(acc % p);
          }
        FpMat ker = A.kernel();
        if (!ker.rows()) continue;
        std::vector<std::vector<std::uint32_t>> sub;
        for (std::size_t r = 0; r < ker.rows(); ++r) {
          std::vector<std::uint32_t> v(sk.dim(), 0);
          for (std::size_t c = 0; c < blk.size(); ++c) {
            std::uint32_t f = ker.at(r, c);
            if (!f) continue;
            for (std::size_t i = 0; i < sk.dim(); ++i)
              v[i] = static_cast<std::uint32_t>((v[i] + std::uint64_t{f} * blk[c][i]) % p);
          }
          sub.push_back(std::move(v));
        }
        covered += sub.size();
        next.push_back(std::move(sub));
      }
    }
    if (covered != sk.dim()) return solve_block(sig, g_minus1, target, k, columns);
    blocks = std::move(next);
  }
  EchelonSpan out(sk.dim(), p);
  for (const auto& blk : blocks) {
    EchelonSpan part = solve_block(sig, g_minus1, target, k, blk);
    for (std::size_t r = 0; r < part.dim(); ++r) out.insert(part.basis_row(r));
  }
  return out;
}

namespace {

ProlongResult run_prolong(const ProlongProblem& problem, const std::vector<VectorField>* h1) {
  verify_problem(problem);
  const GradedSubalgebra& g = problem.nonpos;
  const SigPtr& sig = g.signature();
  ProlongResult result;
  result.alg = g;
  int cap = problem.max_degree.value_or(default_degree_cap(*sig));
  auto g_minus1 = g.basis(-1);

  int first_k = 1;
  if (h1) {
    // verify h_1 is a g_0-submodule with [g_{-1}, h_1] = g_0
    GradedSubalgebra h1span(sig);
    for (const auto& x : *h1) h1span.insert(x);
    for (const auto& a : g.basis(0))
      for (const auto& x : *h1) {
        VectorField b = bracket(a, x);
        if (!b.is_zero() && !span_membership(b, h1span, 1).in_span)
          throw std::invalid_argument("partial_prolong: h_1 is not a g_0-submodule");
      }
    const Slice& s0 = Slice::get(sig, 0);
    EchelonSpan onto(s0.dim(), sig->p());
    for (const auto& y : g_minus1)
      for (const auto& x : *h1) {
        VectorField b = bracket(y, x);
        if (!b.is_zero()) onto.insert(s0.coords(b));
      }
    const EchelonSpan* g0 = g.span(0);
    bool surjective = g0 && onto.dim() == g0->dim();
    if (surjective)
      for (std::size_t r = 0; r < onto.dim(); ++r)
        if (!g0->contains(onto.basis_row(r))) surjective = false;
    if (!surjective)
      throw std::invalid_argument("partial_prolong: [g_{-1}, h_1] = g_0 fails (reached dimension " +
                                  std::to_string(onto.dim()) + " of " + std::to_string(g0 ? g0->dim() : 0) + ")");
    for (const auto& x : *h1) result.alg.insert(x);
    first_k = 2;
  }

  result.top_degree = first_k - 1;
  for (int k = first_k; k <= cap; ++k) {
    const EchelonSpan* target = result.alg.span(k - 1);
    EchelonSpan comp = prolong_step(sig, g_minus1, target, k,
                                    problem.torus.empty() ? nullptr : &problem.torus);
    if (comp.dim() == 0) break;
    const Slice& sk = Slice::get(sig, k);
    for (std::size_t r = 0; r < comp.dim(); ++r) {
      VectorField X = sk.field(sig, comp.basis_row(r));
      result.alg.insert(X);
    }
    result.top_degree = k;
    if (k == cap) result.truncated = true;
  }

  // bracket closure is a theorem for prolongs; verify it (throws if broken)
  structure_constants(result.alg);
  return result;
}

}  // namespace

ProlongResult cts_prolong(const ProlongProblem& problem) { return run_prolong(problem, nullptr); }

ProlongResult partial_prolong(const ProlongProblem& problem, const std::vector<VectorField>& h1) {
  return run_prolong(problem, &h1);
}

}  // namespace cts
