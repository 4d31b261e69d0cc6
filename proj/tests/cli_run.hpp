#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace cubaff::test {

struct CliResult
{
    int code = -1;
    std::string out;
};

// Runs the CLI with a shell-quoted argument string; stdout only.
inline CliResult run_cli(const std::string& args)
{
    CliResult r;
    std::string cmd = std::string(CUBAFF_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p))
        r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace cubaff::test
