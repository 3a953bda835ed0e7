#pragma once

#include <functional>
#include <string_view>

namespace scrminer {

using WarningHandler = std::function<void(std::string_view)>;

/// Library warnings go to stderr unless a handler is installed. Returns the
/// previous handler. Not thread-safe; install before mining.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(std::string_view message);

}  // namespace scrminer
