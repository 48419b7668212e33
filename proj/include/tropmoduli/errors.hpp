#pragma once

#include <stdexcept>
#include <string>

namespace tropmoduli {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct IncompatibleOrders : Error {
  IncompatibleOrders() : Error("cyclotomic orders 3 and 5 cannot be mixed") {}
};
struct NonPolynomialQuotient : Error {
  NonPolynomialQuotient() : Error("quotient is not a Laurent polynomial") {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};
struct CoincidentPoints : Error {
  CoincidentPoints() : Error("marked points must be pairwise distinct") {}
};
struct NotTreelike : Error {
  NotTreelike() : Error("dissimilarity does not fit any tree topology exactly") {}
};
struct UnknownName : Error {
  explicit UnknownName(const std::string& n) : Error("unknown name: " + n) {}
};
struct CountMismatch : Error {
  explicit CountMismatch(const std::string& what) : Error(what) {}
};
struct DimensionCollapse : Error {
  explicit DimensionCollapse(const std::string& what) : Error(what) {}
};
struct UnlabeledRay : Error {
  explicit UnlabeledRay(const std::string& what) : Error(what) {}
};
struct RuleViolation : Error {
  explicit RuleViolation(const std::string& what) : Error(what) {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(what) {}
};
struct IdentityFailure : Error {
  explicit IdentityFailure(const std::string& what) : Error(what) {}
};
struct SignInconsistency : Error {
  explicit SignInconsistency(const std::string& what) : Error(what) {}
};
struct ZeroCoefficient : Error {
  explicit ZeroCoefficient(const std::string& what) : Error(what) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace tropmoduli
