#pragma once

#include <cstdint>
#include <utility>

#include "hecke/arith.hpp"

namespace hecke {

/// (g, N, p) with g >= 1, N >= 3, p prime and p not dividing N.
class Parameters {
 public:
  /// Throws HypothesisError naming the first violated hypothesis.
  Parameters(std::int64_t g, std::int64_t N, std::int64_t p);

  unsigned g() const { return g_; }
  std::uint64_t N() const { return N_; }
  std::uint64_t p() const { return p_; }

  friend bool operator==(const Parameters&, const Parameters&) = default;
  friend auto operator<=>(const Parameters&, const Parameters&) = default;

 private:
  unsigned g_;
  std::uint64_t N_;
  std::uint64_t p_;
};

/// Every factor of the bound for one parameter triple.
struct BoundBreakdown {
  Parameters params;
  ExactRational mass_constant;  // c_g
  Integer gsp_order;            // #GSp_{2g}(Z/NZ)
  Integer signed_product;       // prod_{j=1..g} (p^j + (-1)^j)
  Integer sigma_count;          // #Sigma(N)
  Integer rep_sum_bound;        // p^{(g+2)(g-1)/2} (p^2 - 1)
  Integer total;

  friend bool operator==(const BoundBreakdown&, const BoundBreakdown&) = default;
};

/// c_g = (-1)^{g(g+1)/2} 2^{-g} prod_{j=1..g} zeta(1 - 2j). Always positive.
ExactRational mass_constant(int g);

/// (2^{2g} g!)^{-1} prod_{j=1..g} B_{2j}, taken literally. Has the same
/// absolute value as mass_constant(g) but is negative for g = 2, 3 mod 4,
/// so the bound never uses it.
ExactRational mass_constant_bernoulli(int g);

/// prod_{j=1..g} (p^j + (-1)^j).
Integer signed_product(unsigned g, std::uint64_t p);

/// Mass of principally polarized superspecial abelian varieties:
/// sum 1/#Aut(A, lambda) = c_g prod_{j=1..g} (p^j + (-1)^j).
ExactRational ekedahl_mass(unsigned g, std::uint64_t p);

/// #Sigma(N) = c_g #GSp_{2g}(Z/NZ) prod (p^j + (-1)^j). The product must be
/// an integer; ConsistencyError otherwise.
Integer sigma_count(const Parameters& params);

/// num_irreps(g, p) * max_irrep_dim_bound(g, p) = p^{(g+2)(g-1)/2} (p^2 - 1).
Integer rep_sum_bound(unsigned g, std::uint64_t p);

BoundBreakdown hecke_bound(const Parameters& params);

/// The bound as one product, c_g #GSp p^{(g+2)(g-1)/2} (p^2-1) prod(p^j+(-1)^j),
/// without going through sigma_count / rep_sum_bound.
ExactRational theorem_product(const Parameters& params);

struct AsymptoticExponents {
  unsigned n_exponent;  // 2g^2 + g + 1 = dim GSp_{2g}
  unsigned p_exponent;  // g^2 + g + 1
  friend bool operator==(const AsymptoticExponents&, const AsymptoticExponents&) = default;
};

AsymptoticExponents asymptotic_exponents(unsigned g);

}  // namespace hecke
