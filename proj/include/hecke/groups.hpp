#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "hecke/arith.hpp"

namespace hecke {

enum class Family { GeneralLinear, SymplecticSimilitude, UnitarySimilitude };

struct IntegersModN {
  std::uint64_t modulus;
};

/// F_{p^2}.
struct QuadraticField {
  std::uint64_t p;
};

using CoefficientRing = std::variant<IntegersModN, QuadraticField>;

/// A finite matrix group: family, size parameter g and coefficient ring.
/// Matrices are 2g x 2g for SymplecticSimilitude and g x g otherwise.
class GroupDescriptor {
 public:
  /// Rejects family/ring mismatches, g = 0, N < 2 and composite p.
  GroupDescriptor(Family family, unsigned g, CoefficientRing ring);

  Family family() const { return family_; }
  unsigned g() const { return g_; }
  const CoefficientRing& ring() const { return ring_; }

  unsigned matrix_dimension() const;
  std::uint64_t ring_size() const;
  /// ring_size^(dimension^2), saturating at UINT64_MAX.
  std::uint64_t candidate_count() const;
  std::string to_string() const;

 private:
  Family family_;
  unsigned g_;
  CoefficientRing ring_;
};

inline constexpr std::uint64_t kDefaultEnumerationCutoff = 100'000'000;

/// #GSp_{2g}(F_p) = (p - 1) p^{g^2} prod_{j=1..g} (p^{2j} - 1).
Integer order_gsp_prime(unsigned g, std::uint64_t p);

/// #GSp_{2g}(Z/p^k Z) = p^{(k-1)(2g^2+g+1)} #GSp_{2g}(F_p); GSp_{2g} is smooth
/// of dimension 2g^2+g+1.
Integer order_gsp_prime_power(unsigned g, std::uint64_t p, unsigned k);

/// #GSp_{2g}(Z/NZ), multiplicative over the prime-power factors of N.
/// N = 1 gives 1.
Integer order_gsp_modn(unsigned g, std::int64_t N);

/// #GU_g(F_{p^2}) = p^{g(g-1)/2} (p - 1) prod_{j=1..g} (p^j - (-1)^j).
Integer order_gu(unsigned g, std::uint64_t p);

/// Exponent g(g-1)/2 of the p-Sylow subgroup of GU_g(F_{p^2}).
unsigned sylow_p_bound(unsigned g);

/// p^{g(g-1)/2}: cap on the dimension of an irreducible representation of
/// GU_g(F_{p^2}) in defining characteristic.
Integer max_irrep_dim_bound(unsigned g, std::uint64_t p);

/// p^{g-1}(p^2 - 1): number of irreducible mod-p representations of GU_g(F_{p^2}).
Integer num_irreps(unsigned g, std::uint64_t p);

/// Counts the group's elements by exhaustive search over matrices with
/// entries in the coefficient ring:
///   GeneralLinear         det M is a unit
///   SymplecticSimilitude  M^T J M = lambda J, J = [[0, I], [-I, 0]], lambda a unit
///   UnitarySimilitude     M* M = lambda I, M* the Frobenius-conjugate transpose,
///                         lambda in F_p^x
/// Throws CutoffExceeded when candidate_count() > cutoff. The search prunes
/// partial matrices that already violate the condition and splits the first
/// column across threads; the total does not depend on the split.
std::uint64_t enumerate_order(const GroupDescriptor& desc,
                              std::uint64_t cutoff = kDefaultEnumerationCutoff);

}  // namespace hecke
