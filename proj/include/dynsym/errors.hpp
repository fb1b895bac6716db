#ifndef DYNSYM_ERRORS_HPP
#define DYNSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynsym {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct DegenerateSubstitution : std::domain_error {
  using std::domain_error::domain_error;
};
struct IrreducibleToInvariants : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoFit : std::domain_error {
  using std::domain_error::domain_error;
};
struct LadderViolation : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoSolution : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonLatticeWeights : std::domain_error {
  using std::domain_error::domain_error;
};
struct HermiticityCheckFailed : std::domain_error {
  using std::domain_error::domain_error;
};
struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dynsym

#endif
