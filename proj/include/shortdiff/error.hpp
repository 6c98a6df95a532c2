#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "json.hpp"

namespace shortdiff {

using json = nlohmann::json;

enum class ErrorKind {
  InvalidOrder,
  InvalidParameter,
  GroupAxiom,
  Homomorphism,
  Irreducible,
  DivisionByZero,
  Unsupported,
  NoHalving,
  Hypothesis,        // a constructor's mathematical precondition does not hold
  TheoremViolation,  // hypotheses held but the promised conclusion did not
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Raised by builders and constructors. `condition` names the axiom or
/// hypothesis that failed and `witness` carries the concrete elements.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string condition, json witness, const std::string& message)
      : std::runtime_error(message),
        kind_(kind),
        condition_(std::move(condition)),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& condition() const noexcept { return condition_; }
  const json& witness() const noexcept { return witness_; }

  json to_json() const;

 private:
  ErrorKind kind_;
  std::string condition_;
  json witness_;
};

/// A negative verdict from one of the verification engines.
struct Failure {
  int condition = 0;  // index of the violated condition, engine specific
  std::string name;
  json witness;
  std::string message;

  json to_json() const;
};

/// Either a verified value or the failure that prevented it.
template <class T>
class Verdict {
 public:
  Verdict(T value) : state_(std::move(value)) {}
  Verdict(Failure failure) : state_(std::move(failure)) {}

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const {
    if (!ok()) throw Error(ErrorKind::Hypothesis, failure().name, failure().witness, failure().message);
    return std::get<T>(state_);
  }
  const Failure& failure() const { return std::get<Failure>(state_); }

 private:
  std::variant<T, Failure> state_;
};

}  // namespace shortdiff
