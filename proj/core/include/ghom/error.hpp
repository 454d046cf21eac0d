#pragma once

#include <stdexcept>
#include <string>

namespace ghom {

enum class Errc {
  ring_mismatch,
  ambient_mismatch,
  parse_error,
  homogeneity,
  bad_argument,
  containment,
  infinite_length,
  budget_exceeded,
  retry_exhausted,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace ghom
