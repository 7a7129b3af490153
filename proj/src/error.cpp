#include "twistab/error.hpp"

namespace twistab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::ForeignElement: return "ForeignElement";
    case Errc::NotATail: return "NotATail";
    case Errc::NonAbelianDescent: return "NonAbelianDescent";
    case Errc::NotABridge: return "NotABridge";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::NotInMonoid: return "NotInMonoid";
    case Errc::NotInXm: return "NotInXm";
    case Errc::NotDominated: return "NotDominated";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NothingLeft: return "NothingLeft";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::string location)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      location_(std::move(location)) {}

void fail(Errc code, const std::string& message, const std::string& location) {
  throw Error(code, message, location);
}

}  // namespace twistab
