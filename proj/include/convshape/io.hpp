#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

namespace convshape {

// Shortest round-trip decimal form (std::to_chars); integral values get a
// trailing ".0" so CSV columns stay typed.
std::string format_double(double value);

// Writes through a temp file in the same directory, then renames into place.
// On failure the temp file is removed and nothing is left at `path`.
void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer);

std::string fnv1a_hex(std::string_view bytes);
std::string file_digest(const std::filesystem::path& path);  // fnv1a of contents

std::string read_file(const std::filesystem::path& path);

// Minimal CSV field quoting (RFC 4180 style).
std::string csv_escape(const std::string& field);

}  // namespace convshape
