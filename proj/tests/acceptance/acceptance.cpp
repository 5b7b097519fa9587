// Acceptance suite: every criterion at its pinned tolerance and runtime
// budget. Prints one PASS/FAIL line per criterion followed by its checks.

#include <iostream>

#include "rbc/verify.hpp"

int main()
{
    rbc::verify::Options opt; // defaults: published constants, 200 runs per point
    opt.threads = 0;

    const auto reports = rbc::verify::run_all(opt);
    rbc::verify::print_report(std::cout, reports, true);

    int failed = 0;
    for (const auto& r : reports)
        failed += !r.passed();
    std::cout << (reports.size() - failed) << "/" << reports.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
