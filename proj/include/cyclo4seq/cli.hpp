#pragma once

#include <iosfwd>

namespace cyclo4seq {

// Entry point behind the cyclo4seq binary; stream-injected so tests can
// drive it in-process. Exit codes: 0 success, 1 failed verification or
// internal error, 2 usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclo4seq
