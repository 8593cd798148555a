// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_ERROR_HPP
#define WAVEGROUP_CORE_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace wavegroup
{

// Failure categories. The numeric values are mirrored by wg_status in the C API.
enum class ErrorCode
{
  kArgument = 1,
  kStructural = 2,
  kResonance = 3,
  kEscapeTime = 4,
  kHorizon = 5,
  kCoercivity = 6,
  kConcatResonance = 7,
  kInadmissible = 8,
  kQuadrature = 9,
  kIo = 10,
};

const char *ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string &what, std::optional<std::size_t> mode = std::nullopt)
    : std::runtime_error(what), code_(code), mode_(mode)
  {
  }

  ErrorCode code() const noexcept { return code_; }

  // Index of the offending mode, when the failure is attributable to one.
  std::optional<std::size_t> mode() const noexcept { return mode_; }

private:
  ErrorCode code_;
  std::optional<std::size_t> mode_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string &what,
                              std::optional<std::size_t> mode = std::nullopt)
{
  throw Error(code, what, mode);
}

}  // namespace wavegroup

#endif  // WAVEGROUP_CORE_ERROR_HPP
