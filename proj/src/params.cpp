#include "ckn/params.hpp"

namespace ckn::params {

namespace {

void flag(std::vector<Violation>& out, const std::string& cond, const std::string& msg,
          const Rational& value) {
  out.push_back(Violation{cond, msg, value});
}

}  // namespace

std::string to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::Sobolev: return "Sobolev";
    case SpecialCase::Hardy: return "Hardy";
    case SpecialCase::GagliardoNirenberg: return "GagliardoNirenberg";
    case SpecialCase::Nash: return "Nash";
    case SpecialCase::None: break;
  }
  return "none";
}

std::string to_string(Regime r) {
  return r == Regime::Subcritical ? "Subcritical" : "Interpolation";
}

Rational sigma_from(const ParamTuple& t) {
  if (t.a == 0) throw Error("sigma undefined at a=0");
  return (t.gamma - (1 - t.a) * t.beta) / t.a;
}

Rational s_of(int n, const Rational& p, const Rational& alpha, const Rational& sigma) {
  const Rational den = n - p * (sigma - alpha + 1);
  if (den <= 0) throw Error("s undefined: violates n > p(sigma - alpha + 1)");
  return Rational(n) * p / den;
}

Rational balance_residual(const ParamTuple& t) {
  const Rational n(t.n);
  return (1 / t.r + t.gamma / n) - t.a * (1 / t.p + (t.alpha - 1) / n) -
         (1 - t.a) * (1 / t.q + t.beta / n);
}

Rational b_of(const Rational& a, const Rational& q, const Rational& s) {
  if (a < 0 || a > 1) throw Error("b_of: a outside [0,1]");
  if (q < 1) throw Error("b_of: q < 1");
  if (s <= 0) throw Error("b_of: s must be positive");
  return a * q / (a * q + (1 - a) * s);
}

Rational r_of(const Rational& b, const Rational& q, const Rational& s) {
  if (b < 0 || b > 1) throw Error("r_of: b outside [0,1]");
  return (1 - b) * q + b * s;
}

std::pair<Rational, Rational> interpolation_weights(int n, const Rational& p,
                                                    const Rational& alpha,
                                                    const Rational& sigma) {
  if (sigma < alpha - 1 || sigma > alpha)
    throw Error("interpolation weights undefined outside [alpha-1, alpha]");
  if (p >= n) throw Error("interpolation weights require p < n");
  const Rational theta = sigma - alpha + 1;
  const Rational c = theta * (n - p) / (n - theta * p);
  return {theta, c};
}

Rational kappa_of(const Rational& s, const Rational& p) {
  if (s <= 0 || s >= p) throw Error("kappa defined only in subcritical regime");
  return 1 / s - 1 / p;
}

Rational p_star_of(int n, const Rational& p) {
  if (p >= n) throw Error("Sobolev conjugate undefined for p >= n");
  return Rational(n) * p / (n - p);
}

ValidationReport validate(const ParamTuple& t) {
  ValidationReport rep;
  const Rational n(t.n);

  if (t.n < 1) flag(rep.violations, "n >= 1", "dimension must be a positive integer", n);
  if (t.p < 1) flag(rep.violations, "p >= 1", "exponent p below 1", t.p);
  if (t.q < 1) flag(rep.violations, "q >= 1", "exponent q below 1", t.q);
  if (t.r <= 0) flag(rep.violations, "r > 0", "exponent r must be positive", t.r);
  if (t.a < 0 || t.a > 1)
    flag(rep.violations, "a in [0,1]", "interpolation weight outside [0,1]", t.a);

  if (t.n >= 1) {
    if (t.gamma * t.r <= -n)
      flag(rep.violations, "gamma*r > -n", "weight gamma*r not integrable", t.gamma * t.r);
    if (t.alpha * t.p <= -n)
      flag(rep.violations, "alpha*p > -n", "weight alpha*p not integrable", t.alpha * t.p);
    if (t.beta * t.q <= -n)
      flag(rep.violations, "beta*q > -n", "weight beta*q not integrable", t.beta * t.q);
  }

  if (t.r > 0 && t.n >= 1) {
    rep.balance_residual = balance_residual(t);
    if (rep.balance_residual != 0)
      flag(rep.violations, "balance residual = 0", "dimensional balance violated",
           rep.balance_residual);
  }

  // Admissibility relations that hold for all sigma and unlock the weighted
  // Hardy / Sobolev machinery.
  if (t.n >= 1) {
    if ((t.alpha - 1) * t.p <= -n)
      flag(rep.violations, "(alpha-1)*p > -n", "Hardy weight not integrable",
           (t.alpha - 1) * t.p);
    if (t.p < n) {
      const Rational ps = p_star_of(t.n, t.p);
      if (t.alpha * ps <= -n)
        flag(rep.violations, "alpha*p_star > -n", "Sobolev weight not integrable",
             t.alpha * ps);
    }
  }

  if (t.a > 0 && t.a <= 1 && t.n >= 1) {
    const Rational sigma = sigma_from(t);
    rep.sigma = sigma;
    if (sigma > t.alpha)
      flag(rep.violations, "sigma <= alpha", "sigma exceeds alpha", sigma);

    // Necessity of sigma >= alpha-1 holds only under the critical relation
    // 1/p + (alpha-1)/n = 1/r + gamma/n; the sufficiency theory does not
    // reject such tuples, so this is warning-level.
    if (t.r > 0 && 1 / t.p + (t.alpha - 1) / n == 1 / t.r + t.gamma / n && sigma < t.alpha - 1)
      flag(rep.warnings, "sigma >= alpha-1 (critical case)",
           "critical-case necessity condition violated", sigma);

    const Rational s_den = n - t.p * (sigma - t.alpha + 1);
    if (s_den <= 0) {
      flag(rep.violations, "n > p(sigma-alpha+1)", "key parameter s undefined", s_den);
    } else {
      const Rational s = n * t.p / s_den;
      rep.s = s;
      if (s * sigma <= -n)
        flag(rep.violations, "s*sigma > -n", "weight sigma*s not integrable", s * sigma);

      if (s < t.p) {
        rep.regime = Regime::Subcritical;
      } else if (t.p < n) {
        if (s <= p_star_of(t.n, t.p)) rep.regime = Regime::Interpolation;
        // s > p_star cannot happen with sigma <= alpha; leave unset otherwise.
      }
      // p >= n with s >= p: no Sobolev endpoint exists, regime stays unset.
    }
  }

  // Special cases, most specific first.
  if (t.a == 1 && rep.sigma) {
    if (t.gamma == t.alpha)
      rep.special_case = SpecialCase::Sobolev;
    else if (t.gamma == t.alpha - 1)
      rep.special_case = SpecialCase::Hardy;
  }
  if (rep.special_case == SpecialCase::None && rep.sigma && t.alpha == 0 && t.beta == 0 &&
      *rep.sigma == 0) {
    const bool nash = t.p == 2 && t.q == 1 && t.n >= 1 &&
                      t.a == Rational(2) / (2 + Rational(4) / t.n);
    rep.special_case = nash ? SpecialCase::Nash : SpecialCase::GagliardoNirenberg;
  }

  rep.valid = rep.violations.empty();
  return rep;
}

ValidationReport classify(const ParamTuple& t) { return validate(t); }

DerivedParams derive(const ParamTuple& t) {
  DerivedParams d;
  if (t.p < t.n) d.p_star = p_star_of(t.n, t.p);
  if (t.a == 0) return d;  // sigma unconstrained, nothing else derivable

  d.sigma = sigma_from(t);
  const Rational den = Rational(t.n) - t.p * (*d.sigma - t.alpha + 1);
  if (den <= 0) return d;

  d.s = Rational(t.n) * t.p / den;
  d.b = b_of(t.a, t.q, *d.s);
  if (*d.sigma >= t.alpha - 1 && *d.sigma <= t.alpha && t.p < t.n) {
    auto [theta, c] = interpolation_weights(t.n, t.p, t.alpha, *d.sigma);
    d.theta = theta;
    d.c = c;
  }
  if (*d.s < t.p) d.kappa = kappa_of(*d.s, t.p);
  return d;
}

}  // namespace ckn::params
