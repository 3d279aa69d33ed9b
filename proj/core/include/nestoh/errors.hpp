// Typed error conditions shared by the whole library.
#pragma once

#include <stdexcept>
#include <string>

namespace nestoh {

enum class errc {
  exponent_underflow,       // reverse transform would produce a negative exponent
  not_univariate,           // operation requires a polynomial in t alone
  not_tree_poset,           // poset is not a tree-shaped Hasse diagram
  missing_singleton,        // building set lacks a singleton of its support
  union_closure_violation,  // intersecting members whose union is absent
  overlapping_supports,     // parts passed to combine are not disjoint
  not_connected,            // building set does not contain its full support
  not_omega_invariant,      // building set is not fixed by i -> n-i+1
  not_maximal,              // tubing does not have n-1 tubes
  bad_params,               // parameter outside the documented range
  parse_error,              // malformed input file
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace nestoh
