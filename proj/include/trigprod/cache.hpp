#ifndef TRIGPROD_CACHE_HPP
#define TRIGPROD_CACHE_HPP

#include <filesystem>

#include "trigprod/coeffs.hpp"

namespace trigprod {

/// File name inside a cache directory for one table.
std::filesystem::path cache_file_name(ProductKind kind, int n);

/// Writes the versioned text format:
///   TRIGPROD-COEFFS v1 <P|Q> n=<n> N=<N>
/// followed by N+1 signed decimal coefficient lines. Writes via a temp file
/// and renames, so readers never see a partial table.
std::filesystem::path cache_write(const CoefficientTable& table, const std::filesystem::path& dir);

/// Reads a table back, validating the header, the line count, coeffs[0] = 1
/// and the sum rule (0 for P, 2^n for Q). Violations raise integrity_error
/// naming the failed invariant.
CoefficientTable cache_read(ProductKind kind, int n, const std::filesystem::path& dir);

}  // namespace trigprod

#endif
