#include "scrminer/log.hpp"

#include <iostream>
#include <utility>

namespace scrminer {

namespace {

WarningHandler& handler() {
  static WarningHandler h;
  return h;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler h) {
  return std::exchange(handler(), std::move(h));
}

void warn(std::string_view message) {
  if (auto& h = handler()) {
    h(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

}  // namespace scrminer
