#include "siegel/census_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "siegel/error.hpp"

namespace siegel {

namespace {

constexpr const char* kFormatName = "siegel-census";
constexpr const char* kHeaderLine = "format,version,p,q,locus,normalizer,total,checksum";

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw CacheError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

struct Metadata {
  int version = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string locus;
  std::int64_t normalizer = 0;
  std::int64_t total = 0;
};

std::string checksum_of(const Metadata& m, const std::string& rows) {
  std::ostringstream s;
  s << kFormatName << '|' << m.version << '|' << m.p << '|' << m.q << '|' << m.locus << '|' << m.normalizer << '|'
    << m.total << '\n'
    << rows;
  return sha256_hex(s.str());
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

std::int64_t parse_int(const std::string& s, const std::filesystem::path& path) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw CacheError(path.string() + ": malformed integer field '" + s + "'");
  }
  return v;
}

void write_file(const std::filesystem::path& path, const Metadata& m, const std::string& row_header,
                const std::string& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << kHeaderLine << '\n'
        << kFormatName << ',' << m.version << ',' << m.p << ',' << m.q << ',' << m.locus << ',' << m.normalizer << ','
        << m.total << ',' << checksum_of(m, rows) << '\n'
        << row_header << '\n'
        << rows;
    if (!out) throw CacheError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

struct RawFile {
  Metadata meta;
  std::string checksum;
  std::string row_header;
  std::string rows;  // verbatim, newline-terminated
  std::vector<std::vector<std::string>> fields;
};

RawFile read_file(const std::filesystem::path& path, const char* expected_locus) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("census cache not found: " + path.string());

  RawFile raw;
  std::string line;
  if (!std::getline(in, line) || line != kHeaderLine) throw CacheError(path.string() + ": not a census cache file");
  if (!std::getline(in, line)) throw CacheError(path.string() + ": missing metadata line");
  const auto meta = split(line);
  if (meta.size() != 8 || meta[0] != kFormatName) throw CacheError(path.string() + ": malformed metadata line");
  raw.meta.version = static_cast<int>(parse_int(meta[1], path));
  if (raw.meta.version != kCensusFormatVersion) {
    throw CacheError(path.string() + ": unsupported census format version " + meta[1] + " (expected " +
                     std::to_string(kCensusFormatVersion) + ")");
  }
  raw.meta.p = parse_int(meta[2], path);
  raw.meta.q = parse_int(meta[3], path);
  raw.meta.locus = meta[4];
  raw.meta.normalizer = parse_int(meta[5], path);
  raw.meta.total = parse_int(meta[6], path);
  raw.checksum = meta[7];
  if (raw.meta.locus != expected_locus) {
    throw CacheError(path.string() + ": locus '" + raw.meta.locus + "', expected '" + expected_locus + "'");
  }
  if (!std::getline(in, raw.row_header)) throw CacheError(path.string() + ": missing row header");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    raw.rows += line;
    raw.rows += '\n';
    raw.fields.push_back(split(line));
  }
  if (checksum_of(raw.meta, raw.rows) != raw.checksum) throw CacheError(path.string() + ": checksum mismatch");
  return raw;
}

}  // namespace

void census_store(const CensusTable& table, const std::filesystem::path& path) {
  std::ostringstream rows;
  for (const auto& [key, c] : table.counts) rows << key.first << ',' << key.second << ',' << c << '\n';
  const Metadata m{kCensusFormatVersion, table.p, table.p, CensusTable::kLocus, table.normalizer, table.total};
  write_file(path, m, "a1,a2,count", rows.str());
}

void census_store(const EllipticCensus& table, const std::filesystem::path& path) {
  std::ostringstream rows;
  for (const auto& [a, c] : table.counts) rows << a << ',' << c << '\n';
  const Metadata m{kCensusFormatVersion, table.p, table.q, EllipticCensus::kLocus, table.normalizer, table.total};
  write_file(path, m, "a,count", rows.str());
}

CensusTable census_load(const std::filesystem::path& path) {
  const RawFile raw = read_file(path, CensusTable::kLocus);
  if (raw.row_header != "a1,a2,count") throw CacheError(path.string() + ": unexpected row header");
  CensusTable t;
  t.p = raw.meta.p;
  t.normalizer = raw.meta.normalizer;
  t.total = raw.meta.total;
  std::pair<std::int64_t, std::int64_t> prev{};
  for (const auto& f : raw.fields) {
    if (f.size() != 3) throw CacheError(path.string() + ": malformed row");
    const std::pair key{parse_int(f[0], path), parse_int(f[1], path)};
    if (!t.counts.empty() && !(prev < key)) throw CacheError(path.string() + ": rows not in ascending order");
    t.counts[key] = parse_int(f[2], path);
    prev = key;
  }
  if (raw.meta.q != t.p) throw CacheError(path.string() + ": genus-2 census must have q = p");
  if (const auto problem = verify_census(t); !problem.empty()) throw CacheError(path.string() + ": " + problem);
  return t;
}

EllipticCensus elliptic_census_load(const std::filesystem::path& path) {
  const RawFile raw = read_file(path, EllipticCensus::kLocus);
  if (raw.row_header != "a,count") throw CacheError(path.string() + ": unexpected row header");
  EllipticCensus t;
  t.p = raw.meta.p;
  t.q = raw.meta.q;
  t.normalizer = raw.meta.normalizer;
  t.total = raw.meta.total;
  std::int64_t prev = 0;
  for (const auto& f : raw.fields) {
    if (f.size() != 2) throw CacheError(path.string() + ": malformed row");
    const std::int64_t a = parse_int(f[0], path);
    if (!t.counts.empty() && !(prev < a)) throw CacheError(path.string() + ": rows not in ascending order");
    t.counts[a] = parse_int(f[1], path);
    prev = a;
  }
  if (const auto problem = verify_census(t); !problem.empty()) throw CacheError(path.string() + ": " + problem);
  return t;
}

std::string census_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::string header, meta;
  if (!in || !std::getline(in, header) || !std::getline(in, meta)) {
    throw CacheError("cannot read census header: " + path.string());
  }
  const auto fields = split(meta);
  if (fields.size() != 8) throw CacheError(path.string() + ": malformed metadata line");
  return fields[7];
}

std::filesystem::path genus2_cache_path(const std::filesystem::path& dir, std::int64_t p) {
  return dir / ("genus2_p" + std::to_string(p) + ".csv");
}

std::filesystem::path elliptic_cache_path(const std::filesystem::path& dir, std::int64_t q) {
  return dir / ("elliptic_q" + std::to_string(q) + ".csv");
}

}  // namespace siegel
