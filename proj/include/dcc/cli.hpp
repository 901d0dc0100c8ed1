#pragma once

#include <iosfwd>

namespace dcc::cli {

// exit codes: 0 success, 1 failed assertion (verify fact or baseline
// containment), 2 usage or parse error
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcc::cli
