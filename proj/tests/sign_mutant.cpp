// Runs the sign suite against a library built with one sign convention removed.
// Exit status 0 means the suite missed the mutation.
#include <cstdio>

#include "homlab/sign.hpp"
#include "homlab/suites.hpp"

int main() {
  const homlab::SuiteReport rep = homlab::sign_suite(homlab::SuiteConfig{});
  const int site = homlab::dropped_sign_site();
  std::printf("dropped sign: %s\n%s", site >= 0 ? homlab::sign_site_name(static_cast<homlab::SignSite>(site)) : "none",
              rep.text().c_str());
  return rep.passed() ? 0 : 1;
}
