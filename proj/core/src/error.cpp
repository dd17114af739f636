#include "subcur/error.hpp"

namespace subcur {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::TrivialSubgroup: return "TrivialSubgroup";
    case ErrorKind::EmptyCore: return "EmptyCore";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::RetryLimit: return "RetryLimit";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::MismatchBug: return "MismatchBug";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace subcur
