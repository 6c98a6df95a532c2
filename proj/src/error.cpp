#include "shortdiff/error.hpp"

namespace shortdiff {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::GroupAxiom: return "group-axiom";
    case ErrorKind::Homomorphism: return "homomorphism";
    case ErrorKind::Irreducible: return "irreducibility";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::NoHalving: return "no-halving";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::TheoremViolation: return "theorem-violation";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

json Error::to_json() const {
  return json{{"error", std::string(to_string(kind_))},
              {"condition", condition_},
              {"witness", witness_},
              {"message", what()}};
}

json Failure::to_json() const {
  return json{{"condition", condition}, {"name", name}, {"witness", witness}, {"message", message}};
}

}  // namespace shortdiff
