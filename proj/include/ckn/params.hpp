#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckn/rational.hpp"

namespace ckn::params {

/// Full parameter vector (n, p, q, r, alpha, beta, gamma, a) of the weighted
/// interpolation inequality, in exact rationals.
struct ParamTuple {
  int n = 3;
  Rational p = 2;
  Rational q = 2;
  Rational r = 2;
  Rational alpha = 0;
  Rational beta = 0;
  Rational gamma = 0;
  Rational a = 1;
};

enum class SpecialCase { None, Sobolev, Hardy, GagliardoNirenberg, Nash };
enum class Regime { Subcritical, Interpolation };

std::string to_string(SpecialCase c);
std::string to_string(Regime r);

struct Violation {
  std::string condition;  // short id, e.g. "gamma*r > -n"
  std::string message;
  Rational offending_value;
};

/// Outcome of exact validation. `valid` is true iff `violations` is empty;
/// `warnings` collect conditions the sufficiency theory does not require
/// (critical-case necessity) and never affect validity.
struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
  std::vector<Violation> warnings;
  Rational balance_residual = 0;
  SpecialCase special_case = SpecialCase::None;
  std::optional<Regime> regime;
  std::optional<Rational> sigma;  // unset when a = 0 (unconstrained)
  std::optional<Rational> s;      // unset when undefined
};

/// Exponents derived from a tuple. Fields are set only where defined:
/// sigma and s need a > 0, theta/c need sigma in [alpha-1, alpha] and p < n,
/// kappa needs s < p, p_star needs p < n.
struct DerivedParams {
  std::optional<Rational> sigma;
  std::optional<Rational> s;
  std::optional<Rational> b;
  std::optional<Rational> theta;
  std::optional<Rational> c;
  std::optional<Rational> kappa;
  std::optional<Rational> p_star;
};

/// Checks every admissibility condition exactly; problems are reported, not
/// thrown. Populates special_case/regime/sigma/s where they are defined.
ValidationReport validate(const ParamTuple& t);

/// Same report as validate(); spelled separately because callers asking to
/// classify expect regime and special_case to be meaningful, i.e. a valid
/// tuple.  Invalid tuples simply carry their violations through.
ValidationReport classify(const ParamTuple& t);

/// sigma = (gamma - (1-a) beta) / a.  Throws at a = 0, where the inequality
/// degenerates to an equality and sigma is unconstrained.
Rational sigma_from(const ParamTuple& t);

/// Key exponent s = n p / (n - p (sigma - alpha + 1)).  Throws when the
/// denominator is nonpositive.
Rational s_of(int n, const Rational& p, const Rational& alpha, const Rational& sigma);

/// Exact residual of the dimensional balance:
/// [1/r + gamma/n] - a [1/p + (alpha-1)/n] - (1-a) [1/q + beta/n].
Rational balance_residual(const ParamTuple& t);

/// b = a q / (a q + (1-a) s), in [0,1].
Rational b_of(const Rational& a, const Rational& q, const Rational& s);

/// r = (1-b) q + b s.
Rational r_of(const Rational& b, const Rational& q, const Rational& s);

/// (theta, c) with sigma = (1-theta)(alpha-1) + theta alpha and
/// c = theta (n-p) / (n - theta p).  Requires sigma in [alpha-1, alpha]
/// and p < n.
std::pair<Rational, Rational> interpolation_weights(int n, const Rational& p,
                                                    const Rational& alpha,
                                                    const Rational& sigma);

/// kappa = 1/s - 1/p, defined for 0 < s < p.
Rational kappa_of(const Rational& s, const Rational& p);

/// Sobolev conjugate n p / (n - p); requires p < n.
Rational p_star_of(int n, const Rational& p);

/// Everything derivable from the tuple in one pass.
DerivedParams derive(const ParamTuple& t);

}  // namespace ckn::params
