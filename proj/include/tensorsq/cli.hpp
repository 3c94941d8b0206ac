#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace tensorsq {

// exit codes: 0 success, 1 usage or input error, 2 computed values disagree
// with expected ones (catalog comparison or a verifier identity), 3 resource
// cap exceeded
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensorsq
