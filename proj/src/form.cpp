#include "superroots/form.hpp"

#include "superroots/errors.hpp"

namespace superroots {

FormTable FormTable::standard(BasisId basis, std::optional<Rational> lambda) {
  FormTable t;
  t.basis = basis;
  const int d = basis.dim();
  t.gram.assign(static_cast<std::size_t>(d * d), Scalar());
  auto set = [&](int i, Scalar s) { t.gram[static_cast<std::size_t>(i * d + i)] = s; };
  switch (basis.kind) {
    case BasisKind::EpsDelta:
      for (int i = 0; i < basis.m; ++i) set(i, 1);
      for (int j = 0; j < basis.n; ++j) set(basis.m + j, -1);
      break;
    case BasisKind::Gamma: {
      Scalar lam = Scalar::lambda();
      if (lambda) {
        if (*lambda == 0 || *lambda == -1)
          throw RankError("lambda must not be 0 or -1");
        lam = Scalar(*lambda);
        t.lambda_value = lambda;
      }
      set(0, lam);
      set(1, Scalar(-1) - lam);
      set(2, 1);
      break;
    }
    case BasisKind::F4:
      set(0, 3);
      for (int j = 1; j < 4; ++j) set(j, -1);
      break;
    case BasisKind::G3:
      for (int i = 0; i < 3; ++i) set(i, 1);
      set(3, -2);
      break;
  }
  return t;
}

Scalar form_eval(const Root& u, const Root& v, const FormTable& form) {
  if (u.basis != form.basis || v.basis != form.basis)
    throw BasisMismatch("form_eval(" + u.to_string() + ", " + v.to_string() + ")");
  Scalar acc;
  const int d = form.basis.dim();
  for (int i = 0; i < d; ++i) {
    const Rational& ui = u.coords[static_cast<std::size_t>(i)];
    if (ui == 0) continue;
    for (int j = 0; j < d; ++j) {
      const Rational& vj = v.coords[static_cast<std::size_t>(j)];
      if (vj == 0) continue;
      const Scalar& g = form.at(i, j);
      if (g.is_identically_zero()) continue;
      acc += g * (ui * vj);
    }
  }
  return acc;
}

std::int64_t cartan_integer(const Root& beta, const Root& alpha, const FormTable& form) {
  const Scalar aa = form_eval(alpha, alpha, form);
  if (aa.is_zero()) throw IsotropicReflectionError(alpha.to_string() + " is isotropic");
  const Scalar q = scalar_div(form_eval(beta, alpha, form) * Rational(2), aa);
  if (!q.is_constant() || !is_integer(q.constant_part()))
    throw AxiomViolation("<" + beta.to_string() + ", " + alpha.to_string() + "> = " + q.to_string());
  return q.constant_part().numerator();
}

}  // namespace superroots
