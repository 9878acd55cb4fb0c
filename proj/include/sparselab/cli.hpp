#pragma once

#include <string>
#include <vector>

namespace sparselab {

// exit codes: 0 ok, 2 usage error, 3 check failure, 4 I/O error
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailed = 3;
inline constexpr int kExitIo = 4;

int cli_main(const std::vector<std::string>& args);
int cli_main(int argc, char** argv);

}  // namespace sparselab
