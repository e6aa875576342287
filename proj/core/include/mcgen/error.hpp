#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcgen {

enum class ErrorKind {
  malformed_graph,
  not_a_cycle,
  orientation_reversing,
  unsupported_genus,
  construction_failed,
  unknown_generator,
  invalid_chain,
  separating_class,
  internal_consistency,
  invalid_argument,
  resource_exceeded,
  io_failure,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace mcgen
