#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridminor::cli {

/// Runs one toolkit invocation. args excludes the program name. Exit code 0
/// on success, 1 on domain failure (failed verification, screening rejection
/// under --expect-embeddable), 2 on usage or parse errors.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace gridminor::cli
