#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace rgconj {

/// Natural numbers as used for vertex codes, rational indices and stages.
using Nat = std::uint64_t;
/// Wide naturals for closed-form witnesses that may exceed 64 bits.
using Wide = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;
using Stage = std::size_t;
using MapPair = std::pair<Nat, Nat>;

enum class ErrorKind {
  MalformedLine,
  DuplicateEdge,
  RankNotPermutation,
  UnknownCatalog,
  OverlappingSets,
  WitnessFailure,
  UnsupportedOrder,
  ParityMismatch,
  OrderMismatch,
  NotConjugating,
  MalformedChoiceSet,
  NotAnIsomorphism,
  RowViolation,
  NotCommuting,
  Unresolved,
  TooLarge,
  Overflow,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Domain error carrying a stable name, printed by the CLI as
/// `error <Name>: <detail>`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

std::string to_string(Wide value);

}  // namespace rgconj
