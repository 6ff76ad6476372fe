#pragma once

#include <stdexcept>
#include <string>

namespace homat {

// Bad or contract-violating input: malformed files, out-of-range ids,
// arity mismatches, violated operation hypotheses. CLI exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured bound or budget was exceeded. CLI exit code 3.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homat
