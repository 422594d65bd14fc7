#include "fockbench/diagnostics.hpp"

#include <cstdio>
#include <mutex>
#include <utility>

namespace fockbench {

namespace {

std::mutex g_mutex;
WarningHandler g_handler;  // empty = default stderr sink

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard<std::mutex> lock(g_mutex);
  std::swap(g_handler, handler);
  return handler;
}

void warn(const std::string& message) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_handler) {
    g_handler(message);
  } else {
    std::fprintf(stderr, "[fockbench] warning: %s\n", message.c_str());
  }
}

}  // namespace fockbench
