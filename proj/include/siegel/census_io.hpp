#pragma once

#include <filesystem>
#include <string>

#include "siegel/census.hpp"

namespace siegel {

/// Census cache files are UTF-8 CSV:
///
///   format,version,p,q,locus,normalizer,total,checksum
///   siegel-census,1,3,3,genus2-jacobian,48,1296,<sha256>
///   a1,a2,count
///   -4,8,6
///   ...
///
/// Elliptic files use the locus tag `elliptic` and rows `a,count`. Rows are in ascending
/// order of their key. The checksum is SHA-256 over the metadata fields and the row block.
inline constexpr int kCensusFormatVersion = 1;

void census_store(const CensusTable& table, const std::filesystem::path& path);
void census_store(const EllipticCensus& table, const std::filesystem::path& path);

/// Throws CacheError on a missing file, a version mismatch, a checksum mismatch or a
/// failed structural check (mass identity, twist symmetry).
CensusTable census_load(const std::filesystem::path& path);
EllipticCensus elliptic_census_load(const std::filesystem::path& path);

/// Hex SHA-256 recorded in the file header. Throws CacheError if the header is unreadable.
std::string census_checksum(const std::filesystem::path& path);

std::filesystem::path genus2_cache_path(const std::filesystem::path& dir, std::int64_t p);
std::filesystem::path elliptic_cache_path(const std::filesystem::path& dir, std::int64_t q);

}  // namespace siegel
