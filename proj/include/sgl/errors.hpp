#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgl {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_order_error : public error {
 public:
  using error::error;
};

class invalid_action_error : public error {
 public:
  using error::error;
};

// Requested construction exceeds a configured representability bound.
// `required` is the order the construction would need; 0 means the order
// overflows 64 bits.
class capacity_error : public error {
 public:
  capacity_error(const std::string& what, std::uint64_t required_order)
      : error(what), required(required_order) {}
  std::uint64_t required;
};

class not_normal_error : public error {
 public:
  using error::error;
};

class domain_error : public error {
 public:
  using error::error;
};

class not_semiabelian_error : public error {
 public:
  using error::error;
};

class no_decomposition_error : public error {
 public:
  using error::error;
};

class not_homomorphism_error : public error {
 public:
  using error::error;
};

class not_surjective_error : public error {
 public:
  using error::error;
};

class precondition_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, int line_, int col_,
              std::string expected_ = {})
      : error(what), line(line_), col(col_), expected(std::move(expected_)) {}
  int line;
  int col;
  std::string expected;  // comma separated expected-token set
};

}  // namespace sgl
