// Runs the full acceptance harness and prints one PASS/FAIL line per
// criterion.  Exits 0 only when every criterion either passes or hits the
// documented structural limitation of the first-order FD oracle.

#include <iostream>

#include "gburgers/acceptance.hpp"

int main() {
    const auto results = gburgers::acceptance::run_all(std::cout);
    return gburgers::acceptance::harness_ok(results) ? 0 : 1;
}
