#pragma once

#include <iosfwd>

namespace radialgeo {

/// Exit codes of the `radialgeo` command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitHypothesis = 1;  // hypothesis failure or compact model
inline constexpr int kExitInput = 2;       // bad input, parse error or numerical failure

/// Entry point of the `radialgeo` command with injectable streams.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace radialgeo
