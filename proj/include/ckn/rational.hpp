#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ckn {

/// Exact rational scalar used for all parameter arithmetic. Never use a
/// floating tolerance on these; equality is equality.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown on contract violations (undefined derivations, bad arguments).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Parses "num/den" or a plain integer string. Rejects floats, empty
/// strings and zero denominators.
Rational parse_rational(const std::string& text);

/// Canonical text form: integers as "k", everything else as "num/den".
std::string format_rational(const Rational& x);

}  // namespace ckn
