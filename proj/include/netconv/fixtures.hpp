#pragma once

#include <string>
#include <vector>

namespace netconv {

// One worked example: a named scenario with a pinned expected outcome,
// checked end to end through the library.  The same table backs the CLI's
// `paper-examples` subcommand and the acceptance suite.
struct FixtureRow {
    std::string name;
    bool passed = false;
    std::string detail; // comma-free, deterministic
};

std::vector<FixtureRow> run_fixture_table();

bool all_fixtures_pass(const std::vector<FixtureRow>& rows);
std::string fixtures_text(const std::vector<FixtureRow>& rows);
// CSV: "fixture,result,detail" rows plus a "summary" footer.
std::string fixtures_csv(const std::vector<FixtureRow>& rows);

} // namespace netconv
