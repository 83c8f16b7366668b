#pragma once

// Small helpers shared by the CLI-driving tests and the acceptance runner:
// run a child process, capture its stdout and exit code.

#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs `command` through the shell, capturing stdout. The caller appends any
// stderr redirection it wants.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = ::pclose(pipe);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    else
        result.exit_code = -1;
    return result;
}

// Quotes a path for the shell.
inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

}  // namespace testsupport
