#ifndef HOMPROOF_TOOLS_CLI_HH
#define HOMPROOF_TOOLS_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace homproof::cli
{
    enum ExitCode : int
    {
        Success = 0,
        Negative = 1,
        Usage = 2,
        InvalidInput = 3,
        CheckFailed = 4
    };

    /// Runs one command line (args[0] is the program name).
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
