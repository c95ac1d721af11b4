#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace delone {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-side precondition does not hold (bad lattice, non-primitive vector, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug or corrupt data.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Integer round_nearest(const Rational& q);  // ties toward +infinity
Integer isqrt(const Integer& z);           // floor(sqrt(z)), z >= 0
bool is_square(const Rational& q, Rational* root = nullptr);

Integer lcm_denominators(const RatVec& v);
Integer gcd_entries(const IntVec& v);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

RatVec to_rational(const IntVec& v);

}  // namespace delone
