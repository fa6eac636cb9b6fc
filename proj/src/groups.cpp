#include "hecke/groups.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>
#include <vector>

#include "hecke/finite_ring.hpp"

namespace hecke {

namespace {

void require_prime(std::uint64_t p, const char* op) {
  if (!is_prime(p)) throw DomainError(std::string(op) + ": p = " + std::to_string(p) + " is not prime");
}

void require_genus(unsigned g, const char* op) {
  if (g == 0) throw DomainError(std::string(op) + ": g must be at least 1");
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

// Runs body(first, stride) on each worker and sums the results. Each worker
// takes first-column indices first, first + stride, ...
template <class Body>
std::uint64_t parallel_sum(std::uint64_t work_items, Body body) {
  const std::uint64_t hw = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(hw, std::max<std::uint64_t>(work_items, 1));
  if (workers == 1) return body(0, 1);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] { partial[w] = body(w, workers); });
  }
  for (auto& t : threads) t.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

// Column-by-column search for M with Gram(M) = lambda * F, where
// Gram(M)_{ab} = pairing(column a, column b).
template <class Ring>
class SimilitudeSearch {
 public:
  using Element = typename Ring::Element;

  SimilitudeSearch(const Ring& ring, Family family, unsigned g)
      : ring_(ring), family_(family), g_(g) {
    dim_ = family == Family::SymplecticSimilitude ? 2 * g : g;
    vectors_ = saturating_pow(ring.size(), dim_);
    // Fill column pairs (i, i+g) early so lambda is fixed at the second column.
    if (family == Family::SymplecticSimilitude) {
      for (unsigned i = 0; i < g; ++i) {
        order_.push_back(i);
        order_.push_back(i + g);
      }
    } else {
      for (unsigned i = 0; i < g; ++i) order_.push_back(i);
    }
  }

  std::uint64_t vector_count() const { return vectors_; }

  std::uint64_t count(std::uint64_t first, std::uint64_t stride) const {
    State state(dim_);
    std::uint64_t total = 0;
    for (std::uint64_t v = first; v < vectors_; v += stride) {
      decode(v, state.columns[order_[0]]);
      if (place(state, 0)) total += descend(state, 1);
      state.lambda_level = kUnset;
    }
    return total;
  }

 private:
  static constexpr unsigned kUnset = std::numeric_limits<unsigned>::max();

  struct State {
    explicit State(unsigned dim) : columns(dim, std::vector<Element>(dim)) {}
    std::vector<std::vector<Element>> columns;
    Element lambda{};
    unsigned lambda_level = kUnset;
  };

  std::uint64_t descend(State& state, unsigned level) const {
    if (level == dim_) return 1;
    std::uint64_t total = 0;
    for (std::uint64_t v = 0; v < vectors_; ++v) {
      decode(v, state.columns[order_[level]]);
      if (place(state, level)) total += descend(state, level + 1);
      if (state.lambda_level == level) state.lambda_level = kUnset;
    }
    return total;
  }

  void decode(std::uint64_t index, std::vector<Element>& out) const {
    const std::uint64_t n = ring_.size();
    for (unsigned k = 0; k < dim_; ++k) {
      out[k] = ring_.element(index % n);
      index /= n;
    }
  }

  // Entry of the fixed form: +1, -1 or 0.
  int form(unsigned a, unsigned b) const {
    if (family_ == Family::UnitarySimilitude) return a == b ? 1 : 0;
    if (a < g_ && b == a + g_) return 1;
    if (a >= g_ && b + g_ == a) return -1;
    return 0;
  }

  Element pairing(const std::vector<Element>& x, const std::vector<Element>& y) const {
    Element acc = ring_.zero();
    if (family_ == Family::UnitarySimilitude) {
      for (unsigned k = 0; k < dim_; ++k) acc = ring_.add(acc, ring_.mul(ring_.conj(x[k]), y[k]));
    } else {
      for (unsigned k = 0; k < g_; ++k) {
        acc = ring_.add(acc, ring_.mul(x[k], y[k + g_]));
        acc = ring_.sub(acc, ring_.mul(x[k + g_], y[k]));
      }
    }
    return acc;
  }

  // Checks every Gram entry between the column at `level` and the columns
  // placed before it (both orders, plus the diagonal).
  bool place(State& state, unsigned level) const {
    const unsigned a = order_[level];
    for (unsigned prior = 0; prior <= level; ++prior) {
      const unsigned b = order_[prior];
      if (!check(state, level, a, b)) return false;
      if (a != b && !check(state, level, b, a)) return false;
    }
    return true;
  }

  bool check(State& state, unsigned level, unsigned a, unsigned b) const {
    const Element gram = pairing(state.columns[a], state.columns[b]);
    const int f = form(a, b);
    if (f == 0) return gram == ring_.zero();
    const Element scaled = f > 0 ? gram : ring_.sub(ring_.zero(), gram);
    if (state.lambda_level == kUnset) {
      if (!ring_.is_unit(scaled) || !ring_.in_base(scaled)) return false;
      state.lambda = scaled;
      state.lambda_level = level;
      return true;
    }
    return scaled == state.lambda;
  }

  const Ring& ring_;
  Family family_;
  unsigned g_;
  unsigned dim_;
  std::uint64_t vectors_;
  std::vector<unsigned> order_;
};

// Brute force over all n x n matrices mod N, testing det via the Leibniz sum.
std::uint64_t count_general_linear(const ResidueRing& ring, unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<std::pair<std::vector<unsigned>, bool>> terms;  // (permutation, odd)
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1U : 0U;
    terms.emplace_back(perm, inversions % 2 == 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::uint64_t size = ring.size();
  const unsigned entries = n * n;
  const std::uint64_t leading = size;  // split on entry (0, 0)
  const std::uint64_t tail = saturating_pow(size, entries - 1);

  return parallel_sum(leading, [&](std::uint64_t first, std::uint64_t stride) {
    std::vector<std::uint64_t> m(entries, 0);
    std::uint64_t total = 0;
    for (std::uint64_t lead = first; lead < leading; lead += stride) {
      m[0] = lead;
      std::fill(m.begin() + 1, m.end(), 0);
      for (std::uint64_t t = 0; t < tail; ++t) {
        std::uint64_t det = 0;
        for (const auto& [p, odd] : terms) {
          std::uint64_t prod = 1;
          for (unsigned i = 0; i < n && prod != 0; ++i) prod = ring.mul(prod, m[i * n + p[i]]);
          det = odd ? ring.sub(det, prod) : ring.add(det, prod);
        }
        if (ring.is_unit(det)) ++total;
        for (unsigned k = 1; k < entries; ++k) {  // odometer over the tail
          if (++m[k] < size) break;
          m[k] = 0;
        }
      }
    }
    return total;
  });
}

template <class Ring>
std::uint64_t count_similitude(const Ring& ring, Family family, unsigned g) {
  const SimilitudeSearch<Ring> search(ring, family, g);
  return parallel_sum(search.vector_count(), [&](std::uint64_t first, std::uint64_t stride) {
    return search.count(first, stride);
  });
}

}  // namespace

GroupDescriptor::GroupDescriptor(Family family, unsigned g, CoefficientRing ring)
    : family_(family), g_(g), ring_(ring) {
  if (g == 0) throw DomainError("group descriptor: g must be at least 1");
  const bool quadratic = std::holds_alternative<QuadraticField>(ring_);
  if (family == Family::UnitarySimilitude && !quadratic) {
    throw DomainError("group descriptor: UnitarySimilitude requires F_{p^2} coefficients");
  }
  if (family != Family::UnitarySimilitude && quadratic) {
    throw DomainError("group descriptor: GeneralLinear/SymplecticSimilitude require Z/NZ coefficients");
  }
  if (quadratic) {
    require_prime(std::get<QuadraticField>(ring_).p, "group descriptor");
  } else if (std::get<IntegersModN>(ring_).modulus < 2) {
    throw DomainError("group descriptor: Z/NZ needs N >= 2");
  }
}

unsigned GroupDescriptor::matrix_dimension() const {
  return family_ == Family::SymplecticSimilitude ? 2 * g_ : g_;
}

std::uint64_t GroupDescriptor::ring_size() const {
  if (const auto* q = std::get_if<QuadraticField>(&ring_)) return saturating_pow(q->p, 2);
  return std::get<IntegersModN>(ring_).modulus;
}

std::uint64_t GroupDescriptor::candidate_count() const {
  const unsigned d = matrix_dimension();
  return saturating_pow(ring_size(), d * d);
}

std::string GroupDescriptor::to_string() const {
  const unsigned d = matrix_dimension();
  std::string ring;
  if (const auto* q = std::get_if<QuadraticField>(&ring_)) {
    ring = "F_" + std::to_string(q->p * q->p);
  } else {
    ring = "Z/" + std::to_string(std::get<IntegersModN>(ring_).modulus);
  }
  switch (family_) {
    case Family::GeneralLinear: return "GL_" + std::to_string(d) + "(" + ring + ")";
    case Family::SymplecticSimilitude: return "GSp_" + std::to_string(d) + "(" + ring + ")";
    case Family::UnitarySimilitude: return "GU_" + std::to_string(d) + "(" + ring + ")";
  }
  return "?";
}

Integer order_gsp_prime(unsigned g, std::uint64_t p) {
  require_genus(g, "order_gsp_prime");
  require_prime(p, "order_gsp_prime");
  Integer order = Integer(p - 1) * ipow(p, static_cast<unsigned long>(g) * g);
  for (unsigned j = 1; j <= g; ++j) order *= ipow(p, 2UL * j) - 1;
  return order;
}

Integer order_gsp_prime_power(unsigned g, std::uint64_t p, unsigned k) {
  if (k == 0) throw DomainError("order_gsp_prime_power: k must be at least 1");
  const Integer base = order_gsp_prime(g, p);
  const unsigned long dimension = 2UL * g * g + g + 1;
  return base * ipow(p, (k - 1UL) * dimension);
}

Integer order_gsp_modn(unsigned g, std::int64_t N) {
  require_genus(g, "order_gsp_modn");
  if (N <= 0) throw DomainError("order_gsp_modn: N must be positive, got " + std::to_string(N));
  Integer order = 1;
  for (const auto& [prime, exponent] : factorize(static_cast<std::uint64_t>(N)).factors) {
    order *= order_gsp_prime_power(g, prime, exponent);
  }
  return order;
}

Integer order_gu(unsigned g, std::uint64_t p) {
  require_genus(g, "order_gu");
  require_prime(p, "order_gu");
  Integer order = ipow(p, static_cast<unsigned long>(g) * (g - 1) / 2) * Integer(p - 1);
  for (unsigned j = 1; j <= g; ++j) {
    const Integer pj = ipow(p, j);
    order *= (j % 2 == 0) ? Integer(pj - 1) : Integer(pj + 1);
  }
  return order;
}

unsigned sylow_p_bound(unsigned g) { return g * (g - 1) / 2; }

Integer max_irrep_dim_bound(unsigned g, std::uint64_t p) {
  require_genus(g, "max_irrep_dim_bound");
  require_prime(p, "max_irrep_dim_bound");
  return ipow(p, sylow_p_bound(g));
}

Integer num_irreps(unsigned g, std::uint64_t p) {
  require_genus(g, "num_irreps");
  require_prime(p, "num_irreps");
  return ipow(p, g - 1) * (ipow(p, 2) - 1);
}

std::uint64_t enumerate_order(const GroupDescriptor& desc, std::uint64_t cutoff) {
  const std::uint64_t candidates = desc.candidate_count();
  if (candidates > cutoff) throw CutoffExceeded(candidates, cutoff);

  if (const auto* q = std::get_if<QuadraticField>(&desc.ring())) {
    return count_similitude(QuadraticExtension(q->p), desc.family(), desc.g());
  }
  const ResidueRing ring(std::get<IntegersModN>(desc.ring()).modulus);
  if (desc.family() == Family::GeneralLinear) return count_general_linear(ring, desc.g());
  return count_similitude(ring, desc.family(), desc.g());
}

}  // namespace hecke
