#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "checks.hpp"

// Runs every criterion once and prints one PASS/FAIL line each. A criterion
// fails if its check fails or it overruns its time budget.
int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  int failed = 0;
  for (const auto& c : dlab::checks::criteria()) {
    auto start = std::chrono::steady_clock::now();
    dlab::checks::Result r;
    try {
      r = c.run(seed);
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = r.pass && secs < c.budget_seconds;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS " : "FAIL ") << c.id << " " << c.name << " (" << secs << " s of "
              << c.budget_seconds << " s): " << r.detail << "\n";
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " criteria" : std::string("all criteria pass"))
            << std::endl;
  return failed ? 1 : 0;
}
