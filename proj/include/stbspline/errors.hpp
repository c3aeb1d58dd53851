#pragma once

#include <stdexcept>
#include <string>

namespace stbs {

// Invalid run setup: bad flags, malformed config keys, grids that do not
// divide the domain, and similar user-facing mistakes.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical failure while advancing: blow-up, non-finite state, or a
// linear solve that cannot proceed.
class solver_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A tridiagonal pivot fell below the breakdown threshold.
class singular_system_error : public solver_error {
 public:
  using solver_error::solver_error;
};

// Filesystem trouble while writing run outputs.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stbs
