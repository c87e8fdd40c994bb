#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfq {

enum class Errc {
  NotPrime,
  EvenCharacteristic,
  ReducibleModulus,
  InvalidModulus,
  MixedCharacteristic,
  MixedField,
  DivideByZero,
  BothZero,
  NotMonic,
  Zero,
  DegreeTooLarge,
  DegreeMismatch,
  ZeroDenominator,
  ShapeTooSmall,
  NotPiZero,
  TooLarge,
  WidthTooSmall,
  TooShort,
  PreconditionViolated,
  WrongClass,
  NotCoprime,
  LengthMismatch,
  BadParity,
  OutOfRange,
  ExponentNotInteger,
  BoundUndefined,
  RangeEmpty,
  ParseError,
};

std::string_view errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace hfq
