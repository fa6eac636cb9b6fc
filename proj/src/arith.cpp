#include "hecke/arith.hpp"

#include <mutex>
#include <shared_mutex>

namespace hecke {

ExactRational::ExactRational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    Integer out;
    const std::string s(part);
    if (s.empty() || out.set_str(s, 10) != 0) {
      throw DomainError("malformed rational: '" + std::string(text) + "'");
    }
    return out;
  };
  if (slash == std::string_view::npos) return ExactRational(parse_int(text));
  return ExactRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

ExactRational ExactRational::abs() const { return ExactRational(Raw{}, mpq_class(::abs(value_))); }

std::string ExactRational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.value_ == 0) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(Raw{}, mpq_class(-value_)); }

std::uint64_t Factorization::product() const {
  std::uint64_t n = 1;
  for (const auto& [prime, exponent] : factors) {
    for (unsigned i = 0; i < exponent; ++i) n *= prime;
  }
  return n;
}

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Even-index Bernoulli numbers B_0, B_2, B_4, ..., grown on demand.
class BernoulliTable {
 public:
  ExactRational get(unsigned m) {
    const std::size_t index = m / 2;
    {
      std::shared_lock lock(mutex_);
      if (index < even_.size()) return even_[index];
    }
    std::unique_lock lock(mutex_);
    while (even_.size() <= index) extend();
    return even_[index];
  }

 private:
  // sum_{k=0}^{m} C(m+1, k) B_k = 0, solved for B_m. Odd k > 1 vanish.
  void extend() {
    const unsigned long m = 2 * even_.size();
    if (m == 0) {
      even_.emplace_back(1);
      return;
    }
    ExactRational sum = ExactRational(binomial(m + 1, 1)) * ExactRational(-1, 2);
    for (unsigned long k = 0; k < m; k += 2) {
      sum += ExactRational(binomial(m + 1, k)) * even_[k / 2];
    }
    even_.push_back(-sum / ExactRational(Integer(m + 1)));
  }

  std::shared_mutex mutex_;
  std::vector<ExactRational> even_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

ExactRational bernoulli(unsigned m) {
  if (m % 2 != 0) {
    throw ConventionError("bernoulli(" + std::to_string(m) +
                          "): odd index rejected (B_1 sign is convention-dependent, "
                          "higher odd indices vanish)");
  }
  return bernoulli_table().get(m);
}

ExactRational zeta_negative(int j) {
  if (j <= 0) throw DomainError("zeta_negative: j must be positive, got " + std::to_string(j));
  const auto two_j = static_cast<unsigned>(2 * j);
  return -bernoulli(two_j) / ExactRational(static_cast<long>(two_j));
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: 0 has no prime factorization");
  Factorization out;
  auto strip = [&](std::uint64_t d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.factors.push_back({d, e});
  };
  strip(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) strip(d);
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer ipow(std::uint64_t base, unsigned long exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

std::string to_decimal(const Integer& n) { return n.get_str(10); }

unsigned p_adic_valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw DomainError("p_adic_valuation of 0");
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

}  // namespace hecke
