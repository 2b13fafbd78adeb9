#pragma once

#include <stdexcept>
#include <string>

namespace isoprofile {

/// An argument lies outside the domain of a formula (angle range, area range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A candidate region does not fit inside the notched square.
class InfeasibleRegionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// dP/dt was requested at an area outside the arc branch of the profile.
class BranchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bracket without a sign change, or no convergence within max_iter.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isoprofile
