#pragma once

#include <stdexcept>
#include <string>

namespace orthocomp {

/// Base for every domain/validation failure raised by the library.
/// The CLI maps these to exit code 2.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string &what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string &kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

#define ORTHOCOMP_DEFINE_ERROR(Name)                                           \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string &what) : Error(#Name, what) {}         \
    }

ORTHOCOMP_DEFINE_ERROR(NormalizationError);
ORTHOCOMP_DEFINE_ERROR(ZeroVectorError);
ORTHOCOMP_DEFINE_ERROR(DimensionMismatchError);
ORTHOCOMP_DEFINE_ERROR(IndexError);
ORTHOCOMP_DEFINE_ERROR(KindMismatchError);
ORTHOCOMP_DEFINE_ERROR(NonHermitianError);
ORTHOCOMP_DEFINE_ERROR(StepError);
ORTHOCOMP_DEFINE_ERROR(SizeError);
ORTHOCOMP_DEFINE_ERROR(RangeError);
ORTHOCOMP_DEFINE_ERROR(FormatError);

#undef ORTHOCOMP_DEFINE_ERROR

/// File could not be opened or written. Kept apart from Error so the CLI
/// can report it with its own exit code.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string &what)
        : std::runtime_error("IoError: " + what) {}
};

} // namespace orthocomp
