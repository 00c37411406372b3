#ifndef MREL_ENV_IO_HPP
#define MREL_ENV_IO_HPP

#include <iosfwd>
#include <string>

#include "mrel/term.hpp"

namespace mrel {

/// File-format error with the offending 1-based line number.
struct FileFormatError : Error {
    FileFormatError(const std::string& message, std::size_t line)
        : Error(message + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

/// Line-oriented environment files. '#' starts a comment, blank lines are
/// ignored:
///
///   universe a b c
///   rel R
///   a -> {b, c}        # one pair per line; {} is the empty set
///   a -> {}
///   end
///
/// A rel block also accepts a one-line relation literal such as
/// "{ a -> {b, c}, a -> {} }" in place of the pair lines, so canonical
/// printed relations load back directly. Saving always writes the
/// canonical one-pair-per-line form with sorted pairs and name-sorted
/// relation blocks.
Environment load_env(std::istream& in);
Environment load_env_file(const std::string& path);
Environment parse_env(const std::string& text);

std::string env_to_text(const Environment& env);
void save_env_file(const Environment& env, const std::string& path);

/// Parses a one-line relation literal ("{ a -> {b}, b -> {} }" or "{}")
/// over a known universe. Inverse of Multirelation::to_string.
Multirelation parse_relation_literal(const Universe& u, const std::string& text);

}  // namespace mrel

#endif
