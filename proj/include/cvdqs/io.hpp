#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace cvdqs {

// Shortest round-trip decimal form, locale-independent, so reruns emit
// byte-identical files.
std::string format_double(double value);

// Fixed-point form with the given number of decimals; negative zero is
// normalized to zero.
std::string format_fixed(double value, int decimals);

double round_decimals(double value, int decimals);

// FNV-1a 64-bit over the bytes of `text`, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

// Writes via a temp file in the target directory followed by a rename, so
// readers never observe a half-written file. Creates parent directories.
void atomic_write_text(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace cvdqs
