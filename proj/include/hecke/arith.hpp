#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hecke/errors.hpp"

namespace hecke {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ExactRational(const Integer& value) : value_(value) {}
  ExactRational(const Integer& numerator, const Integer& denominator);

  /// Parses "n" or "n/d" (decimal, optional leading '-').
  static ExactRational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  ExactRational abs() const;

  /// "num/den"; integers still carry "/1" so the format is uniform.
  std::string to_string() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.to_string(); }

 private:
  struct Raw {};
  ExactRational(Raw, mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty means 1.
struct Factorization {
  std::vector<PrimePower> factors;

  std::uint64_t product() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// B_m for even m, with the convention B_1 = -1/2. Odd m is rejected
/// (ConventionError) rather than guessing a sign for B_1.
ExactRational bernoulli(unsigned m);

/// zeta(1 - 2j) = -B_{2j} / (2j) for j >= 1.
ExactRational zeta_negative(int j);

/// Deterministic trial division. n = 0 is a DomainError.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// base^exp as a big integer.
Integer ipow(std::uint64_t base, unsigned long exp);

std::string to_decimal(const Integer& n);

/// Exponent of the largest power of p dividing n (n != 0).
unsigned p_adic_valuation(const Integer& n, std::uint64_t p);

}  // namespace hecke
