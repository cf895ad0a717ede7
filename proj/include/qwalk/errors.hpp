#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

enum class ErrorKind {
    non_unitary,
    degenerate_coin,
    too_large,
    out_of_support,
    bad_params,
    parse_error,
    io_error,
    internal,
};

/// Name used in machine-readable error records ("NonUnitary", ...).
const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

#define QWALK_DEFINE_ERROR(Name, Kind)                                                             \
    class Name : public Error {                                                                    \
      public:                                                                                      \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}                   \
    };

QWALK_DEFINE_ERROR(NonUnitary, non_unitary)
QWALK_DEFINE_ERROR(DegenerateCoin, degenerate_coin)
QWALK_DEFINE_ERROR(TooLarge, too_large)
QWALK_DEFINE_ERROR(OutOfSupport, out_of_support)
QWALK_DEFINE_ERROR(BadParams, bad_params)
QWALK_DEFINE_ERROR(ParseError, parse_error)
QWALK_DEFINE_ERROR(IoError, io_error)
QWALK_DEFINE_ERROR(InternalError, internal)

#undef QWALK_DEFINE_ERROR

}  // namespace qwalk
