#include "cvdqs/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace cvdqs {

std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (result.ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buffer, result.ptr);
}

std::string format_fixed(double value, int decimals) {
  if (decimals < 0 || decimals > 17) {
    throw std::invalid_argument("format_fixed: bad decimal count");
  }
  double rounded = round_decimals(value, decimals);
  if (rounded == 0.0) {
    rounded = 0.0;  // drop a negative sign on zero
  }
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), rounded,
                                    std::chars_format::fixed, decimals);
  if (result.ec != std::errc()) {
    throw std::runtime_error("format_fixed: conversion failed");
  }
  return std::string(buffer, result.ptr);
}

double round_decimals(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char byte : text) {
    hash ^= byte;
    hash *= 0x100000001B3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buffer, 16);
}

void atomic_write_text(const std::filesystem::path& path,
                       const std::string& content) {
  const std::filesystem::path parent = path.parent_path();
  if (!parent.empty()) {
    std::filesystem::create_directories(parent);
  }
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("atomic_write_text: cannot open " +
                               tmp.string());
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw std::runtime_error("atomic_write_text: short write to " +
                               tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cvdqs
