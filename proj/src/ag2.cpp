#include "cts/ag2.hpp"

#include <stdexcept>

namespace cts {

const std::array<CartanMatrixRecord, 4>& ag2_cartan_matrices() {
  static const std::array<CartanMatrixRecord, 4> tables = {{
      {1, {{{0, 1, 0}, {-1, 2, -3}, {0, -1, 2}}}, {1, 0, 0}},
      {2, {{{0, 1, 0}, {-1, 0, 3}, {0, -1, 2}}}, {1, 1, 0}},
      {3, {{{0, -3, 1}, {-3, 0, 2}, {-1, -2, 2}}}, {1, 1, 0}},
      {4, {{{2, -1, 0}, {-3, 0, 2}, {0, -1, 1}}}, {0, 1, 1}},
  }};
  return tables;
}

RealizedModel build_model(std::uint32_t p, std::uint32_t N) {
  RealizedModel m;
  m.sig = Signature::contact_k1(p, N);
  m.C = std::make_shared<ContactStructure>(m.sig);
  const SigPtr& s = m.sig;

  m.Xt = m.C->field_of(parse_element(s, "t"));
  m.Xp[0] = m.C->field_of(parse_element(s, "- v4 w3 - u v1"));
  m.Xp[1] = m.C->field_of(parse_element(s, "v3 w1"));
  m.Xm[0] = m.C->field_of(parse_element(s, "- v3 w4 - u w1"));
  m.Xm[1] = m.C->field_of(parse_element(s, "v1 w3"));
  // X_3^± = [X_1^±, X_2^±], X_4^± = [X_1^±, X_3^±],
  // X_5^± = [X_1^±, X_4^±], X_6^± = [X_2^±, X_5^±]
  m.Xp[2] = bracket(m.Xp[0], m.Xp[1]);
  m.Xm[2] = bracket(m.Xm[0], m.Xm[1]);
  m.Xp[3] = bracket(m.Xp[0], m.Xp[2]);
  m.Xm[3] = bracket(m.Xm[0], m.Xm[2]);
  m.Xp[4] = bracket(m.Xp[0], m.Xp[3]);
  m.Xm[4] = bracket(m.Xm[0], m.Xm[3]);
  m.Xp[5] = bracket(m.Xp[1], m.Xp[4]);
  m.Xm[5] = bracket(m.Xm[1], m.Xm[4]);
  m.H1 = bracket(m.Xp[0], m.Xm[0]);
  m.H2 = bracket(m.Xp[1], m.Xm[1]);

  for (const auto& X : {m.Xt, m.Xp[0], m.Xp[1], m.Xm[0], m.Xm[1]})
    if (*X.degree() != 0 || *X.parity() != 0)
      throw std::logic_error("build_model: degree-0 generator bookkeeping failed");

  m.negative = GradedSubalgebra(s);
  m.negative.insert(m.C->field_of(DPElement::one(s)));
  for (std::uint32_t j = 0; j < s->odd_count(); ++j)
    m.negative.insert(m.C->field_of(DPElement::generator(s, 1 + j)));
  if (m.negative.component_dim(-2) != 1 || m.negative.component_dim(-1) != 7)
    throw std::logic_error("build_model: g_- dimensions off");

  GradedSubalgebra g2 = bracket_closure(s, {m.Xp[0], m.Xp[1], m.Xm[0], m.Xm[1]});
  m.g2_dim = g2.dim();
  m.nonpos_full = m.negative;
  for (const auto& X : g2.basis(0)) m.nonpos_full.insert(X);
  m.nonpos_full.insert(m.Xt);
  return m;
}

namespace {

bool is_multiple_of(const VectorField& X, const VectorField& Y, int expected) {
  // X == expected · Y mod p
  std::uint32_t p = X.signature()->p();
  std::int64_t e = expected % static_cast<std::int64_t>(p);
  if (e < 0) e += p;
  return X == Y.scaled(static_cast<std::uint32_t>(e));
}

}  // namespace

ChevalleyReport verify_chevalley(const RealizedModel& model, const std::array<std::array<int, 2>, 2>& a) {
  ChevalleyReport rep;
  const VectorField* X[2] = {&model.Xp[0], &model.Xp[1]};
  const VectorField* Y[2] = {&model.Xm[0], &model.Xm[1]};
  const VectorField H[2] = {model.H1, model.H2};

  if (!bracket(H[0], H[1]).is_zero()) {
    rep.detail = "[H1, H2] != 0";
    return rep;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == j) continue;
      if (!bracket(*X[i], *Y[j]).is_zero()) {
        rep.detail = "[X" + std::to_string(i + 1) + "^+, X" + std::to_string(j + 1) + "^-] != 0";
        return rep;
      }
    }
  for (bool transposed : {false, true}) {
    bool ok = true;
    std::string why;
    for (int i = 0; i < 2 && ok; ++i)
      for (int j = 0; j < 2 && ok; ++j) {
        int aij = transposed ? a[j][i] : a[i][j];
        if (!is_multiple_of(bracket(H[i], *X[j]), *X[j], aij)) {
          ok = false;
          why = "[H" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) + "^+] != a_ij X";
        }
        if (ok && !is_multiple_of(bracket(H[i], *Y[j]), *Y[j], -aij)) {
          ok = false;
          why = "[H" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) + "^-] != -a_ij X";
        }
      }
    if (ok) {
      rep.pass = true;
      rep.transposed = transposed;
      return rep;
    }
    if (!transposed) rep.detail = why;
  }
  return rep;
}

GradedSubalgebra build_tilde_g0(const RealizedModel& model) {
  if (model.sig->p() != 3) throw std::invalid_argument("build_tilde_g0: defined for p = 3 only");
  GradedSubalgebra psl = bracket_closure(model.sig, {model.Xp[0], model.Xm[0], model.Xp[2], model.Xm[2]});
  if (psl.dim() != 7)
    throw std::logic_error("build_tilde_g0: closure of {X1pm, X3pm} has dimension " + std::to_string(psl.dim()) +
                           ", expected 7");
  VectorField z = model.C->field_of(parse_element(model.sig, "t + v1 w1 + v3 w3 + 2 v4 w4"));
  GradedSubalgebra out = psl;
  if (!out.insert(z)) throw std::logic_error("build_tilde_g0: central element lies in psl(3)");
  for (const auto& x : out.basis(0))
    if (!bracket(z, x).is_zero()) throw std::logic_error("build_tilde_g0: z is not central");
  return out;
}

std::vector<VectorField> tilde_border_neg(const RealizedModel& model) {
  return {model.Xm[0], model.Xm[2]};
}

std::vector<VectorField> tilde_border_pos(const RealizedModel& model) {
  return {model.Xp[0], model.Xp[2]};
}

}  // namespace cts
