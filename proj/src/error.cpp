#include "hfq/error.hpp"

namespace hfq {

std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::MixedCharacteristic: return "MixedCharacteristic";
    case Errc::MixedField: return "MixedField";
    case Errc::DivideByZero: return "DivideByZero";
    case Errc::BothZero: return "BothZero";
    case Errc::NotMonic: return "NotMonic";
    case Errc::Zero: return "Zero";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::ShapeTooSmall: return "ShapeTooSmall";
    case Errc::NotPiZero: return "NotPiZero";
    case Errc::TooLarge: return "TooLarge";
    case Errc::WidthTooSmall: return "WidthTooSmall";
    case Errc::TooShort: return "TooShort";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::WrongClass: return "WrongClass";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BadParity: return "BadParity";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ExponentNotInteger: return "ExponentNotInteger";
    case Errc::BoundUndefined: return "BoundUndefined";
    case Errc::RangeEmpty: return "RangeEmpty";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hfq
