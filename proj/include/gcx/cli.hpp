#ifndef GCX_CLI_HPP
#define GCX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gcx {

// Exit status: 0 success, 1 verification failure, 2 usage error.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gcx

#endif
