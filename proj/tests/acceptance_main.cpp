// Acceptance runner: executes the full verification battery and prints one
// line per criterion. Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>

#include "resalg/suite.hpp"

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  const auto start = std::chrono::steady_clock::now();
  const resalg::SuiteReport report = resalg::run_paper_suite(only);
  const auto stop = std::chrono::steady_clock::now();

  int idx = 0, passed = 0, failed = 0, skipped = 0;
  for (const auto& c : report.checks) {
    ++idx;
    const char* tag = "PASS";
    if (c.status == resalg::CheckStatus::Fail) tag = "FAIL";
    if (c.status == resalg::CheckStatus::Skip) tag = "SKIP";
    std::printf("[%2d/%2d] %s %-28s (%s) %.2fs\n", idx,
                static_cast<int>(report.checks.size()), tag, c.name.c_str(),
                c.anchor.c_str(), c.seconds);
    if (c.status != resalg::CheckStatus::Skip && !c.detail.empty())
      std::printf("        %s\n", c.detail.c_str());
    if (c.status == resalg::CheckStatus::Pass) ++passed;
    if (c.status == resalg::CheckStatus::Fail) ++failed;
    if (c.status == resalg::CheckStatus::Skip) ++skipped;
  }
  const double total =
      std::chrono::duration_cast<std::chrono::duration<double>>(stop - start)
          .count();
  std::printf("acceptance: %d passed, %d failed, %d skipped in %.1fs\n",
              passed, failed, skipped, total);
  return failed == 0 ? 0 : 1;
}
