#include "skewforge/error.hpp"

namespace skewforge {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::SettingMismatch: return "SettingMismatch";
    case Errc::ClosureCapExceeded: return "ClosureCapExceeded";
    case Errc::NotStabilizerInvariant: return "NotStabilizerInvariant";
    case Errc::NotGammaElement: return "NotGammaElement";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::ProjectionSearchFailed: return "ProjectionSearchFailed";
    case Errc::UnsupportedMonoid: return "UnsupportedMonoid";
    case Errc::EmptySupport: return "EmptySupport";
    case Errc::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case Errc::NotGInvariantFamily: return "NotGInvariantFamily";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::RelationFailed: return "RelationFailed";
    case Errc::NonGenericTableau: return "NonGenericTableau";
    case Errc::UnsupportedFlavor: return "UnsupportedFlavor";
    case Errc::UnsupportedSetting: return "UnsupportedSetting";
    case Errc::InvalidSetting: return "InvalidSetting";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ParseError: return "ParseError";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotInvertible: return "NotInvertible";
  }
  return "Error";
}

}  // namespace skewforge
