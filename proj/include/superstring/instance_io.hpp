#pragma once

// Plain-text instance files: one string per line, `#` starts a comment line,
// blank lines are skipped. Strings are printable non-whitespace ASCII.

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "superstring/words.hpp"

namespace superstring {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws InputError naming the offending line.
std::vector<Text> read_strings(std::istream& in);
/// Throws InputError if the file cannot be opened or is malformed.
std::vector<Text> read_strings_file(const std::filesystem::path& path);

void write_strings(std::ostream& out, std::span<const Text> strings,
                   const std::string& comment = {});
void write_strings_file(const std::filesystem::path& path, std::span<const Text> strings,
                        const std::string& comment = {});

}  // namespace superstring
