// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/error.hpp"

namespace wavegroup
{

const char *ErrorCodeName(ErrorCode code)
{
  switch (code)
  {
    case ErrorCode::kArgument:
      return "argument";
    case ErrorCode::kStructural:
      return "structural";
    case ErrorCode::kResonance:
      return "resonance";
    case ErrorCode::kEscapeTime:
      return "escape_time";
    case ErrorCode::kHorizon:
      return "horizon";
    case ErrorCode::kCoercivity:
      return "coercivity";
    case ErrorCode::kConcatResonance:
      return "concatenation_resonance";
    case ErrorCode::kInadmissible:
      return "inadmissible_horizon";
    case ErrorCode::kQuadrature:
      return "quadrature";
    case ErrorCode::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace wavegroup
