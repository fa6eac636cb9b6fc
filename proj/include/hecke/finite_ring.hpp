#pragma once

#include <cstdint>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

/// Z/NZ. Elements are residues in [0, N), indexed by their value.
class ResidueRing {
 public:
  using Element = std::uint64_t;

  explicit ResidueRing(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw DomainError("Z/NZ needs N >= 2");
  }

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return modulus_; }
  Element element(std::uint64_t index) const { return index; }
  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element add(Element a, Element b) const { return (a + b) % modulus_; }
  Element sub(Element a, Element b) const { return (a + modulus_ - b) % modulus_; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % modulus_);
  }
  Element conj(Element a) const { return a; }
  bool is_unit(Element a) const { return std::gcd(a, modulus_) == 1; }
  bool in_base(Element) const { return true; }

 private:
  std::uint64_t modulus_;
};

/// F_{p^2} = F_p[w] / (w^2 + c1 w + c0), with (c1, c0) the lexicographically
/// smallest pair giving an irreducible polynomial.
class QuadraticExtension {
 public:
  struct Element {
    std::uint64_t a = 0;  // a + b w
    std::uint64_t b = 0;
    friend bool operator==(const Element&, const Element&) = default;
  };

  explicit QuadraticExtension(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_ * p_; }
  std::uint64_t c1() const { return c1_; }
  std::uint64_t c0() const { return c0_; }

  /// Index a + b p.
  Element element(std::uint64_t index) const { return {index % p_, index / p_}; }
  std::uint64_t index(Element x) const { return x.a + x.b * p_; }
  Element zero() const { return {0, 0}; }
  Element one() const { return {1, 0}; }

  Element add(Element x, Element y) const { return {(x.a + y.a) % p_, (x.b + y.b) % p_}; }
  Element sub(Element x, Element y) const { return {(x.a + p_ - y.a) % p_, (x.b + p_ - y.b) % p_}; }
  Element mul(Element x, Element y) const;
  /// x^p, via the closed form w^p = -c1 - w.
  Element conj(Element x) const;
  /// x^p by square-and-multiply; independent of conj().
  Element frobenius(Element x) const { return pow(x, p_); }
  Element pow(Element x, std::uint64_t e) const;
  bool is_unit(Element x) const { return !(x == zero()); }
  bool in_base(Element x) const { return x.b == 0; }

 private:
  std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p_);
  }

  std::uint64_t p_;
  std::uint64_t c1_ = 0;
  std::uint64_t c0_ = 0;
};

}  // namespace hecke
