#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hecke {

/// Argument outside an operation's domain (n = 0, j <= 0, composite p, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Odd-index Bernoulli request; the sign convention for B_1 is ambiguous.
class ConventionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Which hypothesis on (g, N, p) failed.
enum class Hypothesis { GenusPositive, LevelAtLeastThree, PrimeP, CoprimeLevel };

/// A violated hypothesis of the bound; what() names it.
class HypothesisError : public DomainError {
 public:
  HypothesisError(Hypothesis which, const std::string& message)
      : DomainError(message), which_(which) {}
  Hypothesis which() const { return which_; }

 private:
  Hypothesis which_;
};

/// Enumeration refused because the candidate space is above the cutoff.
class CutoffExceeded : public std::runtime_error {
 public:
  CutoffExceeded(std::uint64_t candidates, std::uint64_t cutoff)
      : std::runtime_error("enumeration refused: " + std::to_string(candidates) +
                           " candidate matrices exceed cutoff " + std::to_string(cutoff)),
        candidates_(candidates),
        cutoff_(cutoff) {}
  std::uint64_t candidates() const { return candidates_; }
  std::uint64_t cutoff() const { return cutoff_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t cutoff_;
};

/// A formula produced a value that cannot be right (e.g. a non-integer
/// cardinality). Signals a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hecke
