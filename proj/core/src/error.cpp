#include "rgconj/error.hpp"

#include <algorithm>

namespace rgconj {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::RankNotPermutation: return "RankNotPermutation";
    case ErrorKind::UnknownCatalog: return "UnknownCatalog";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::WitnessFailure: return "WitnessFailure";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NotConjugating: return "NotConjugating";
    case ErrorKind::MalformedChoiceSet: return "MalformedChoiceSet";
    case ErrorKind::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorKind::RowViolation: return "RowViolation";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::Unresolved: return "Unresolved";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

std::string to_string(Wide value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace rgconj
