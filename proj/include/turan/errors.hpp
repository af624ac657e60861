#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Input outside an operation's domain (not a prime, m > n, alpha <= 0, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A tuple fails the |z_k| >= 1 requirement of a lower-bound check.
class precondition_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A configured cap (field order, FFT length, enumeration size) would be exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A randomized search ran out of attempts without meeting its target.
class search_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace turan
