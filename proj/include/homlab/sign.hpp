#pragma once

#include <string>

// Building with HOMLAB_DROP_SIGN=<site index> replaces one sign convention by +1.
// Only the sign-mutation tests do this.
#ifndef HOMLAB_DROP_SIGN
#define HOMLAB_DROP_SIGN -1
#endif

namespace homlab {

enum class SignSite : int {
  suspension = 0,     // X[m] differential scaled by (-1)^m
  hom = 1,            // Hom complex: d(f) = d f - (-1)^n f d
  tensor = 2,         // tensor complex: d = d (x) 1 + (-1)^k 1 (x) d
  underline_hom = 3,  // cycle functor differential (-1)^n d f
  dual = 4,           // dual complex differential (-1)^n d^T
};

inline constexpr int kSignSiteCount = 5;

inline const char* sign_site_name(SignSite s) {
  switch (s) {
    case SignSite::suspension: return "suspension";
    case SignSite::hom: return "hom";
    case SignSite::tensor: return "tensor";
    case SignSite::underline_hom: return "underline_hom";
    case SignSite::dual: return "dual";
  }
  return "?";
}

// (-1)^exponent at the given site.
inline constexpr long long site_sign(SignSite s, long long exponent) {
  if (static_cast<int>(s) == HOMLAB_DROP_SIGN) return 1;
  return (exponent % 2 == 0) ? 1 : -1;
}

inline constexpr int dropped_sign_site() { return HOMLAB_DROP_SIGN; }

}  // namespace homlab
