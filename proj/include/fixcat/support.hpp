#pragma once

#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixcat {

// Library-wide failure kinds. Mathematical verdicts (stabilization, locality,
// rank, ...) are ordinary return values; exceptions are reserved for misuse
// of an interface or exceeding an explicit resource cap.
enum class errc {
  capability_missing,
  ill_typed,
  functor_mismatch,
  budget_exceeded,
  non_enumerable,
  resolution_not_invertible,
  non_monotone,
  bad_input,
};

class failure : public std::runtime_error {
public:
  failure(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw failure(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Default resource caps.  Values follow the shipped configuration: chains are
// cut off after 64 stages and hom enumeration after 10^6 candidates.
struct Budget {
  int max_chain_stages = 64;
  std::size_t max_hom = 1000000;
};

// Escapes the separator characters used by structured element names, so that
// generated names stay injective in user-provided alphabets.
inline std::string esc(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == ':' || c == ',' || c == '(' || c == ')' || c == '|') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

template <typename It, typename Fn>
std::string join_map(It first, It last, const std::string& sep, Fn fn) {
  std::ostringstream os;
  for (It it = first; it != last; ++it) {
    if (it != first) os << sep;
    os << fn(*it);
  }
  return os.str();
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  return join_map(parts.begin(), parts.end(), sep, [](const std::string& s) { return s; });
}

}  // namespace fixcat
