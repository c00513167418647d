// config.hpp — sweep configuration files: INI-style sections of key = value
// pairs, one [axis] section per swept axis. Schema documented in the README.

#pragma once

#include <iosfwd>
#include <string>

#include "dqd/sweep.hpp"

namespace dqd {

// Throws ParseError with file:line diagnostics naming the offending field.
SweepSpec parse_sweep_config(std::istream& in, const std::string& filename);

SweepSpec load_sweep_config(const std::string& path); // adds IoError

} // namespace dqd
