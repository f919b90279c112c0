#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isobar::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;       // success
inline constexpr int exit_negative = 1; // well-posed query, negative answer
inline constexpr int exit_usage = 2;    // bad flags, malformed or invalid input
inline constexpr int exit_budget = 3;   // search budget or ceiling exhausted

// Run one subcommand (gen, fixture, check, hamilton, qconn, dual, threeh,
// verify, export) against explicit streams.  `args` excludes the program
// name.  The environment variable ISOBAR_THREADS caps worker parallelism.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

} // namespace isobar::cli
