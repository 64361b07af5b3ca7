#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewforge {

enum class Errc {
  ZeroDenominator,
  DivisionByZero,
  UnknownVariable,
  PoleAtPoint,
  SettingMismatch,
  ClosureCapExceeded,
  NotStabilizerInvariant,
  NotGammaElement,
  ZeroElement,
  ProjectionSearchFailed,
  UnsupportedMonoid,
  EmptySupport,
  NonIntegerMultiplicity,
  NotGInvariantFamily,
  IndexOutOfRange,
  RelationFailed,
  NonGenericTableau,
  UnsupportedFlavor,
  UnsupportedSetting,
  InvalidSetting,
  SyntaxError,
  UnknownSuite,
  ParseError,
  NotInvariant,
  NotInvertible,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(Errc::SyntaxError, "at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace skewforge
