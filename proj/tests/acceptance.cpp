// One PASS/FAIL line per acceptance criterion; exits nonzero if any criterion fails.
#include <cstring>
#include <iostream>

#include "deltacodes/verify.hpp"

int main(int argc, char** argv) {
  deltacodes::verify::Options o;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--extended")) o.extended = true;
    if (!std::strcmp(argv[i], "--small")) o.small_budget = true;
  }
  bool ok = deltacodes::verify::run_all(o, [](const deltacodes::verify::Item& it) {
    std::cout << deltacodes::verify::render(it) << std::flush;
  });
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return ok ? 0 : 1;
}
