// Exact scalar types and small number-theoretic helpers shared by every module.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>
#include <Eigen/LU>
#include <boost/multiprecision/eigen.hpp>

namespace lie3z {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Row-vector convention throughout: a form is x * A * x^t.
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using RowVector3 = Eigen::Matrix<Scalar, 1, 3>;

using Prime = std::int64_t;

/// Malformed input or a request outside an operation's domain (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical identity that should hold did not (CLI exit code 1).
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string identity, const std::string& detail)
      : std::runtime_error(identity + ": " + detail), identity_(std::move(identity)) {}
  const std::string& identity() const noexcept { return identity_; }

 private:
  std::string identity_;
};

/// A computation exceeds a configured resource bound.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer ipow(const Integer& base, unsigned exponent);
Integer ipow(Prime base, unsigned exponent);
/// p^e for any sign of e.
Rational ppow(Prime p, int exponent);

/// v_p(n); n must be nonzero.
int valuation(const Integer& n, Prime p);
/// v_p(r) for nonzero rational r.
int valuation(const Rational& r, Prime p);

bool is_prime(std::int64_t n);
void require_prime(Prime p);

/// Legendre symbol (a/p) for odd p: 0, 1 or -1.
int legendre(const Integer& a, Prime p);
/// Smallest positive quadratic non-residue mod an odd prime p.
std::int64_t smallest_nonresidue(Prime p);
/// Non-square unit used by the catalog: smallest non-residue for odd p, -3 for p = 2.
std::int64_t default_rho(Prime p);

/// Least non-negative residue.
Integer mod_floor(const Integer& a, const Integer& m);
/// Inverse of a unit modulo m.
Integer mod_inverse(const Integer& a, const Integer& m);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Integer& n);
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Checked narrowing for values known to be small.
std::int64_t to_int64(const Integer& n);

}  // namespace lie3z
