#pragma once

#include <stdexcept>
#include <string>

namespace twistab {

enum class Errc {
  NonAssociative,
  NoIdentity,
  NoInverse,
  ForeignElement,
  NotATail,
  NonAbelianDescent,
  NotABridge,
  LengthMismatch,
  NotAdmissible,
  NotInMonoid,
  NotInXm,
  NotDominated,
  TooLarge,
  NothingLeft,
  InvalidInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string location = {});
  Errc code() const { return code_; }
  const std::string& location() const { return location_; }

 private:
  Errc code_;
  std::string location_;
};

[[noreturn]] void fail(Errc code, const std::string& message,
                       const std::string& location = {});

}  // namespace twistab
