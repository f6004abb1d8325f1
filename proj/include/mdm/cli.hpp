#ifndef MDM_CLI_HPP
#define MDM_CLI_HPP

#include <iosfwd>

namespace mdm
{

/// Entry point of the `mdm` command line tool; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mdm

#endif
