#include "hecke/bound.hpp"

#include <numeric>
#include <string>

#include "hecke/groups.hpp"

namespace hecke {

Parameters::Parameters(std::int64_t g, std::int64_t N, std::int64_t p) {
  if (g < 1) {
    throw HypothesisError(Hypothesis::GenusPositive, "g must be at least 1 (got " + std::to_string(g) + ")");
  }
  if (N < 3) {
    throw HypothesisError(Hypothesis::LevelAtLeastThree, "N must be at least 3 (got " + std::to_string(N) + ")");
  }
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw HypothesisError(Hypothesis::PrimeP, "p must be prime (got " + std::to_string(p) + ")");
  }
  if (N % p == 0) {
    throw HypothesisError(Hypothesis::CoprimeLevel,
                          "p divides N (p = " + std::to_string(p) + ", N = " + std::to_string(N) + ")");
  }
  g_ = static_cast<unsigned>(g);
  N_ = static_cast<std::uint64_t>(N);
  p_ = static_cast<std::uint64_t>(p);
}

ExactRational mass_constant(int g) {
  if (g < 1) throw DomainError("mass_constant: g must be at least 1");
  ExactRational c(1);
  for (int j = 1; j <= g; ++j) c *= zeta_negative(j);
  c /= ExactRational(ipow(2, static_cast<unsigned long>(g)));
  const long half_triangle = static_cast<long>(g) * (g + 1) / 2;
  return half_triangle % 2 == 0 ? c : -c;
}

ExactRational mass_constant_bernoulli(int g) {
  if (g < 1) throw DomainError("mass_constant_bernoulli: g must be at least 1");
  ExactRational c(1);
  for (int j = 1; j <= g; ++j) c *= bernoulli(static_cast<unsigned>(2 * j));
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(g));
  return c / ExactRational(ipow(2, 2UL * g) * factorial);
}

Integer signed_product(unsigned g, std::uint64_t p) {
  Integer out = 1;
  for (unsigned j = 1; j <= g; ++j) {
    const Integer pj = ipow(p, j);
    out *= (j % 2 == 0) ? Integer(pj + 1) : Integer(pj - 1);
  }
  return out;
}

ExactRational ekedahl_mass(unsigned g, std::uint64_t p) {
  if (g == 0) throw DomainError("ekedahl_mass: g must be at least 1");
  if (!is_prime(p)) throw DomainError("ekedahl_mass: p = " + std::to_string(p) + " is not prime");
  return mass_constant(static_cast<int>(g)) * ExactRational(signed_product(g, p));
}

Integer sigma_count(const Parameters& params) {
  const ExactRational count = ekedahl_mass(params.g(), params.p()) *
                              ExactRational(order_gsp_modn(params.g(), static_cast<std::int64_t>(params.N())));
  if (!count.is_integer() || count.sign() <= 0) {
    throw ConsistencyError("sigma_count is not a positive integer: " + count.to_string());
  }
  return count.numerator();
}

Integer rep_sum_bound(unsigned g, std::uint64_t p) {
  return num_irreps(g, p) * max_irrep_dim_bound(g, p);
}

BoundBreakdown hecke_bound(const Parameters& params) {
  const unsigned g = params.g();
  const std::uint64_t p = params.p();
  BoundBreakdown out{
      .params = params,
      .mass_constant = mass_constant(static_cast<int>(g)),
      .gsp_order = order_gsp_modn(g, static_cast<std::int64_t>(params.N())),
      .signed_product = signed_product(g, p),
      .sigma_count = sigma_count(params),
      .rep_sum_bound = rep_sum_bound(g, p),
      .total = 0,
  };
  out.total = out.sigma_count * out.rep_sum_bound;
  return out;
}

ExactRational theorem_product(const Parameters& params) {
  const unsigned g = params.g();
  const std::uint64_t p = params.p();
  const Integer factors = order_gsp_modn(g, static_cast<std::int64_t>(params.N())) *
                          ipow(p, static_cast<unsigned long>(g + 2) * (g - 1) / 2) * (ipow(p, 2) - 1) *
                          signed_product(g, p);
  return mass_constant(static_cast<int>(g)) * ExactRational(factors);
}

AsymptoticExponents asymptotic_exponents(unsigned g) {
  return {2 * g * g + g + 1, g * g + g + 1};
}

}  // namespace hecke
