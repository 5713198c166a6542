#pragma once

#include <stdexcept>
#include <string>

namespace reserve_lab {

// Bad parameters, unknown families, malformed configs. Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// value_at_quantile(0) on a family with unbounded support.
class UnboundedValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Virtual value / hazard requested where no density exists.
class NoDensity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InfiniteDivergence : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A lemma's hypothesis did not hold on the verification grid.
class HypothesisFailure : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical assertion (lemma margin, classifier cap) failed. Maps to exit code 3.
class NumericalAssertion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reserve_lab
