// Acceptance suite: runs every verification criterion at its stated tolerance
// and prints one pass/fail line per check. Exit status is nonzero on any
// failure (3 for exact-identity failures, 2 for numeric ones).

#include "mahler/analytics.hpp"

#include <cstdio>
#include <iostream>

int main() {
    using namespace mahler;
    Config cfg;
    try {
        std::vector<CheckRow> rows = verify_all(cfg);
        std::cout << report_text(rows);
        return report_exit_code(rows);
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
}
