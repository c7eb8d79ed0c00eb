#pragma once

#include <ostream>

namespace whopf {

/// Exit codes: 0 ok, 1 verification failure, 2 parse or usage error,
/// 3 precondition violation.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace whopf
