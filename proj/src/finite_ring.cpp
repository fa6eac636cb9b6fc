#include "hecke/finite_ring.hpp"

#include <string>

#include "hecke/arith.hpp"

namespace hecke {

QuadraticExtension::QuadraticExtension(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("F_{p^2} needs a prime p, got " + std::to_string(p));
  // Scan (c1, c0) in lexicographic order; degree 2, so irreducible iff rootless.
  for (std::uint64_t c1 = 0; c1 < p; ++c1) {
    for (std::uint64_t c0 = 0; c0 < p; ++c0) {
      bool has_root = false;
      for (std::uint64_t x = 0; x < p && !has_root; ++x) {
        has_root = (mulmod(x, x) + mulmod(c1, x) + c0) % p == 0;
      }
      if (!has_root) {
        c1_ = c1;
        c0_ = c0;
        return;
      }
    }
  }
  throw ConsistencyError("no irreducible monic quadratic over F_" + std::to_string(p));
}

// (a + b w)(c + d w) with w^2 = -c1 w - c0.
QuadraticExtension::Element QuadraticExtension::mul(Element x, Element y) const {
  const std::uint64_t ac = mulmod(x.a, y.a);
  const std::uint64_t bd = mulmod(x.b, y.b);
  const std::uint64_t cross = (mulmod(x.a, y.b) + mulmod(x.b, y.a)) % p_;
  return {(ac + p_ - mulmod(bd, c0_)) % p_, (cross + p_ - mulmod(bd, c1_)) % p_};
}

QuadraticExtension::Element QuadraticExtension::conj(Element x) const {
  return {(x.a + p_ - mulmod(x.b, c1_)) % p_, (p_ - x.b) % p_};
}

QuadraticExtension::Element QuadraticExtension::pow(Element x, std::uint64_t e) const {
  Element out = one();
  while (e > 0) {
    if (e & 1U) out = mul(out, x);
    x = mul(x, x);
    e >>= 1U;
  }
  return out;
}

}  // namespace hecke
