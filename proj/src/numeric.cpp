#include "lie3zeta/numeric.hpp"

#include <limits>

namespace lie3z {

Integer ipow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Integer ipow(Prime base, unsigned exponent) { return ipow(Integer(base), exponent); }

Rational ppow(Prime p, int exponent) {
  if (exponent >= 0) return Rational(ipow(p, static_cast<unsigned>(exponent)));
  return Rational(Integer(1), ipow(p, static_cast<unsigned>(-exponent)));
}

int valuation(const Integer& n, Prime p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer m = n;
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rational& r, Prime p) {
  if (r == 0) throw std::domain_error("valuation of zero");
  return valuation(Integer(boost::multiprecision::numerator(r)), p) -
         valuation(Integer(boost::multiprecision::denominator(r)), p);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  const auto un = static_cast<std::uint64_t>(n);
  std::uint64_t d = un - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                          31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_prime(Prime p) {
  if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
}

int legendre(const Integer& a, Prime p) {
  if (p == 2) throw std::domain_error("legendre symbol needs an odd prime");
  const Integer r = mod_floor(a, Integer(p));
  if (r == 0) return 0;
  const auto e = static_cast<std::uint64_t>((p - 1) / 2);
  const std::uint64_t v = powmod(static_cast<std::uint64_t>(to_int64(r)), e,
                                 static_cast<std::uint64_t>(p));
  return v == 1 ? 1 : -1;
}

std::int64_t smallest_nonresidue(Prime p) {
  for (std::int64_t a = 2; a < p; ++a) {
    if (legendre(Integer(a), p) == -1) return a;
  }
  throw std::domain_error("no non-residue mod " + std::to_string(p));
}

std::int64_t default_rho(Prime p) { return p == 2 ? -3 : smallest_nonresidue(p); }

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  // Extended Euclid on (a mod m, m).
  Integer old_r = mod_floor(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("not a unit modulo " + m.str());
  return mod_floor(old_s, m);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw InputError("malformed rational: '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InputError("malformed rational: '" + std::string(text) + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw InputError("malformed rational: '" + std::string(text) + "'");
      }
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace lie3z
