#pragma once

#include <stdexcept>
#include <string>

namespace looptor {

/// Malformed or inconsistent input (exit code 2 at the command line).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A face table that breaks d_i d_j = d_{j-1} d_i.
class SimplicialIdentityError : public InputError {
 public:
  SimplicialIdentityError(std::string generator, int i, int j, const std::string& detail)
      : InputError("simplicial identity d_" + std::to_string(i) + " d_" + std::to_string(j) +
                   " = d_" + std::to_string(j - 1) + " d_" + std::to_string(i) +
                   " fails on generator '" + generator + "': " + detail),
        generator_(std::move(generator)),
        i_(i),
        j_(j) {}

  const std::string& generator() const { return generator_; }
  int i() const { return i_; }
  int j() const { return j_; }

 private:
  std::string generator_;
  int i_;
  int j_;
};

/// A degree with infinitely many cobar monomials (degree-0 generators, no length cap).
class InfiniteBasisError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace looptor
