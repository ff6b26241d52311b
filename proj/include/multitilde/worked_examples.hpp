#pragma once

#include <string>
#include <vector>

namespace multitilde {

struct ExampleResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the reference worked examples (shift tables, V(T) tables, the
/// seven-language table, PTT counts, prefix witnesses, Table-style conversions)
/// and reports each one.
std::vector<ExampleResult> run_worked_examples();

} // namespace multitilde
