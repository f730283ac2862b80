#pragma once

#include <iosfwd>

#include "annigraph/module.hpp"
#include "json.hpp"

namespace annigraph {

/// Structure report, ring summary and submodule labels, as printed by `describe`.
nlohmann::ordered_json describe_json(const SubmoduleLattice& L);

/// Exit codes: 0 success, 1 suite not green (FAIL or unknown DISCREPANCY), 2 usage, parse or cap error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace annigraph
