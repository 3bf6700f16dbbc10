#ifndef BVS_CLI_HPP
#define BVS_CLI_HPP

#include <string>
#include <vector>

namespace bvs {

// Exit codes: 0 success, 1 failed checks or internal error, 2 malformed
// input, 3 no valid model found (every attempted fit was invalid).
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace bvs

#endif
