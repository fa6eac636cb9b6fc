#include "hecke/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace hecke {

namespace {

class Recorder {
 public:
  Recorder(VerifyReport& report, std::ostream& log) : report_(report), log_(log) {}

  void add(std::string name, CheckStatus status, std::string detail) {
    static constexpr const char* kLabel[] = {"PASS", "FAIL", "SKIP"};
    log_ << kLabel[static_cast<int>(status)] << ' ' << name << ": " << detail << '\n';
    report_.checks.push_back({std::move(name), status, std::move(detail)});
  }

  template <class T>
  void compare(std::string name, const T& expected, const T& actual) {
    std::ostringstream detail;
    if (expected == actual) {
      detail << actual;
      add(std::move(name), CheckStatus::Pass, detail.str());
    } else {
      detail << "expected " << expected << ", got " << actual;
      add(std::move(name), CheckStatus::Fail, detail.str());
    }
  }

  // A sweep that passes or reports its first counterexample.
  void sweep(std::string name, std::size_t cases, const std::string& first_failure) {
    if (first_failure.empty()) {
      add(std::move(name), CheckStatus::Pass, std::to_string(cases) + " cases");
    } else {
      add(std::move(name), CheckStatus::Fail, first_failure);
    }
  }

 private:
  VerifyReport& report_;
  std::ostream& log_;
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

void oracle(Recorder& rec, const VerifyOptions& opt, const GroupDescriptor& desc, const Integer& closed_form) {
  const std::string name = "oracle " + desc.to_string();
  try {
    const Integer counted(enumerate_order(desc, opt.cutoff));
    rec.compare(name, closed_form, counted);
  } catch (const CutoffExceeded& e) {
    rec.add(name, CheckStatus::Skip,
            std::to_string(e.candidates()) + " candidates over cutoff " + std::to_string(e.cutoff()));
  }
}

void oracle_suite(Recorder& rec, const VerifyOptions& opt) {
  const auto& f = opt.formulas;
  for (std::uint64_t n = 2; n <= 9; ++n) {
    const Integer closed = f.gsp_order(1, static_cast<std::int64_t>(n));
    oracle(rec, opt, GroupDescriptor(Family::SymplecticSimilitude, 1, IntegersModN{n}), closed);
    // GSp_2 = GL_2.
    oracle(rec, opt, GroupDescriptor(Family::GeneralLinear, 2, IntegersModN{n}), closed);
  }
  for (std::uint64_t n : {2, 3}) {
    oracle(rec, opt, GroupDescriptor(Family::SymplecticSimilitude, 2, IntegersModN{n}),
           f.gsp_order(2, static_cast<std::int64_t>(n)));
  }
  const std::pair<unsigned, std::uint64_t> unitary[] = {{1, 2}, {1, 3}, {1, 5}, {1, 7},
                                                        {2, 2}, {2, 3}, {2, 5}, {3, 2}};
  for (const auto& [g, p] : unitary) {
    oracle(rec, opt, GroupDescriptor(Family::UnitarySimilitude, g, QuadraticField{p}), f.gu_order(g, p));
  }
}

void group_invariants(Recorder& rec, const VerifyOptions& opt) {
  const auto& f = opt.formulas;
  {
    std::mt19937_64 rng(20070611);
    std::uniform_int_distribution<std::int64_t> pick(1, 50);
    std::string failure;
    std::size_t cases = 0;
    while (cases < 200 && failure.empty()) {
      const auto a = pick(rng);
      const auto b = pick(rng);
      if (std::gcd(a, b) != 1) continue;
      for (unsigned g = 1; g <= 3 && failure.empty(); ++g, ++cases) {
        if (f.gsp_order(g, a * b) != f.gsp_order(g, a) * f.gsp_order(g, b)) {
          failure = "g=" + std::to_string(g) + " N1=" + std::to_string(a) + " N2=" + std::to_string(b);
        }
      }
    }
    rec.sweep("gsp multiplicativity", cases, failure);
  }
  {
    std::string failure;
    std::size_t cases = 0;
    for (unsigned g = 1; g <= 5; ++g) {
      for (auto p : primes_up_to(13)) {
        ++cases;
        const Integer order = f.gu_order(g, p);
        const unsigned v = p_adic_valuation(order, p);
        if (v != sylow_p_bound(g) && failure.empty()) {
          failure = "g=" + std::to_string(g) + " p=" + std::to_string(p) + ": v_p(#GU) = " +
                    std::to_string(v) + ", expected " + std::to_string(sylow_p_bound(g));
        }
        if (num_irreps(g, p) > order && failure.empty()) {
          failure = "g=" + std::to_string(g) + " p=" + std::to_string(p) + ": more irreps than elements";
        }
      }
    }
    rec.sweep("gu sylow exponent and irrep count", cases, failure);
  }
  {
    std::string failure;
    std::size_t cases = 0;
    for (unsigned g = 1; g <= 6; ++g) {
      for (auto p : primes_up_to(13)) {
        ++cases;
        const Integer closed = ipow(p, (g + 2UL) * (g - 1) / 2) * (ipow(p, 2) - 1);
        if (rep_sum_bound(g, p) != closed && failure.empty()) {
          failure = "g=" + std::to_string(g) + " p=" + std::to_string(p);
        }
      }
    }
    rec.sweep("rep sum bound factorization", cases, failure);
  }
}

void arith_invariants(Recorder& rec) {
  std::string failure;
  std::size_t cases = 0;
  for (unsigned m = 2; m <= 60; m += 2) {
    ++cases;
    // sum_{k=0}^{m} C(m+1, k) B_k = 0, B_1 = -1/2, odd k > 1 vanish.
    ExactRational sum(Integer(m + 1) * -1, Integer(2));
    for (unsigned k = 0; k <= m; k += 2) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), m + 1, k);
      sum += ExactRational(c) * bernoulli(k);
    }
    if (!(sum == ExactRational(0)) && failure.empty()) failure = "m=" + std::to_string(m);
  }
  rec.sweep("bernoulli recurrence", cases, failure);
}

void bound_invariants(Recorder& rec, const VerifyOptions& opt) {
  const auto& f = opt.formulas;
  {
    std::string failure;
    std::size_t cases = 0;
    for (auto p : primes_up_to(100)) {
      ++cases;
      const ExactRational mass = f.mass(1) * ExactRational(signed_product(1, p));
      const ExactRational classical(Integer(p - 1), Integer(24));
      if (!(mass == classical) && failure.empty()) {
        failure = "p=" + std::to_string(p) + ": expected " + classical.to_string() + ", got " + mass.to_string();
      }
    }
    rec.sweep("g=1 mass equals (p-1)/24", cases, failure);
  }
  {
    std::string failure;
    std::size_t cases = 0;
    for (int g = 1; g <= 20; ++g) {
      ++cases;
      const ExactRational zeta_form = f.mass(g);
      const ExactRational bern_form = mass_constant_bernoulli(g);
      const bool agree = zeta_form == bern_form;
      const bool expect_agree = g % 4 == 0 || g % 4 == 1;
      if (failure.empty() && (zeta_form.sign() <= 0 || !(zeta_form.abs() == bern_form.abs()) ||
                              agree != expect_agree)) {
        failure = "g=" + std::to_string(g) + ": zeta form " + zeta_form.to_string() + ", bernoulli form " +
                  bern_form.to_string();
      }
    }
    rec.sweep("mass constant forms agree up to sign", cases, failure);
  }
  {
    std::string failure;
    std::size_t cases = 0;
    for (unsigned g = 1; g <= 3; ++g) {
      for (std::int64_t n = 3; n <= 20; ++n) {
        for (auto p : primes_up_to(13)) {
          if (n % static_cast<std::int64_t>(p) == 0) continue;
          ++cases;
          const ExactRational sigma =
              f.mass(static_cast<int>(g)) * ExactRational(f.gsp_order(g, n)) * ExactRational(signed_product(g, p));
          const Parameters params(g, n, static_cast<std::int64_t>(p));
          std::string problem;
          if (!sigma.is_integer() || sigma.sign() <= 0) {
            problem = "sigma_count = " + sigma.to_string();
          } else {
            const BoundBreakdown b = hecke_bound(params);
            if (!(ExactRational(b.sigma_count) == sigma)) {
              problem = "sigma_count " + to_decimal(b.sigma_count) + " vs " + sigma.to_string();
            } else if (b.total != b.sigma_count * b.rep_sum_bound ||
                       !(ExactRational(b.total) == theorem_product(params))) {
              problem = "total " + to_decimal(b.total) + " does not match the single product";
            }
          }
          if (!problem.empty() && failure.empty()) {
            failure = "g=" + std::to_string(g) + " N=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
                      problem;
          }
        }
      }
    }
    rec.sweep("sigma_count integrality and factor identity", cases, failure);
  }
}

}  // namespace

bool VerifyReport::ok() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerifyReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == status; }));
}

VerifyReport run_verify(const VerifyOptions& options, std::ostream& log) {
  VerifyReport report;
  Recorder rec(report, log);
  oracle_suite(rec, options);
  group_invariants(rec, options);
  arith_invariants(rec);
  bound_invariants(rec, options);
  log << report.count(CheckStatus::Pass) << " passed, " << report.count(CheckStatus::Fail) << " failed, "
      << report.count(CheckStatus::Skip) << " skipped\n";
  return report;
}

}  // namespace hecke
