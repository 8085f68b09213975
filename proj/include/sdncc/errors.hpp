#ifndef SDNCC_ERRORS_HPP
#define SDNCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdncc {

// Malformed configuration or scenario input. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad generator/catalog/demand parameters.
struct InvalidSpec : ConfigError {
  using ConfigError::ConfigError;
};

struct NoUsers : InvalidSpec {
  using InvalidSpec::InvalidSpec;
};

// Some user cannot be reached from the origin (or a required server).
struct DisconnectedGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientSamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Candidate space larger than the configured enumeration budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No enumerated placement satisfies the capacity constraints. Exit code 3.
struct AllInfeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Link capacities cannot carry the demand even with every server open. Exit code 3.
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A selection routes demand to a server that does not host the service.
struct InconsistentDecision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sdncc

#endif
