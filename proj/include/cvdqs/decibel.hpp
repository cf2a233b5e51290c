#pragma once

#include <cmath>
#include <stdexcept>

namespace cvdqs {

// Decibel helpers with the noise-suppression sign convention: a positive dB
// value means the variance sits below the reference, db = -10*log10(ratio).

inline double variance_ratio_from_db(double db) {
  if (!std::isfinite(db)) {
    throw std::invalid_argument("variance_ratio_from_db: non-finite dB value");
  }
  return std::pow(10.0, -db / 10.0);
}

inline double db_from_variance_ratio(double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw std::invalid_argument(
        "db_from_variance_ratio: ratio must be finite and positive");
  }
  return -10.0 * std::log10(ratio);
}

}  // namespace cvdqs
