#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace ontomcq::testsupport {

#ifndef ONTOMCQ_CLI_PATH
#define ONTOMCQ_CLI_PATH "ontomcq"
#endif

struct CliResult {
    int exitCode = -1;
    std::string out;
    std::string err;
};

inline std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "";
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs the real binary with output capture. `env` is prepended verbatim
/// (e.g. "SOURCE_DATE_EPOCH=123").
inline CliResult run_cli(const std::string& args, const std::string& scratch,
                         const std::string& env = "") {
    const std::string outFile = scratch + ".stdout";
    const std::string errFile = scratch + ".stderr";
    const std::string cmd = (env.empty() ? "" : env + " ") + std::string(ONTOMCQ_CLI_PATH) + " " +
                            args + " > " + outFile + " 2> " + errFile;
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp_file(outFile);
    r.err = slurp_file(errFile);
    std::remove(outFile.c_str());
    std::remove(errFile.c_str());
    return r;
}

}  // namespace ontomcq::testsupport
