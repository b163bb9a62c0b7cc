#pragma once

#include <stdexcept>
#include <string>

namespace sepalg {

/// Invalid input or violated precondition.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Two provably-equivalent computation routes disagreed. Always a bug,
/// never a mathematical outcome.
class coherence_error : public std::runtime_error {
public:
  explicit coherence_error(const std::string& what) : std::runtime_error(what) {}
};

/// A randomized search exhausted its budget without reaching a verdict.
class inconclusive_error : public std::runtime_error {
public:
  explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

inline void check_coherent(bool cond, const std::string& msg) {
  if (!cond) throw coherence_error(msg);
}

}  // namespace sepalg
