#include "trigprod/cache.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "trigprod/errors.hpp"

namespace trigprod {

namespace {

BigInt expected_sum(ProductKind kind, int n) {
  if (kind == ProductKind::P) return 0;
  BigInt two_n = 1;
  two_n <<= n;
  return two_n;
}

}  // namespace

std::filesystem::path cache_file_name(ProductKind kind, int n) {
  return std::filesystem::path("coeffs-") += std::string(1, kind_letter(kind)) + "-n" +
                                             std::to_string(n) + ".txt";
}

std::filesystem::path cache_write(const CoefficientTable& table, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path target = dir / cache_file_name(table.kind, table.n);
  const std::filesystem::path temp = target.string() + ".tmp";
  {
    std::ofstream out(temp);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + temp.string());
    out << "TRIGPROD-COEFFS v1 " << kind_letter(table.kind) << " n=" << table.n
        << " N=" << table.degree() << "\n";
    for (const BigInt& c : table.coeffs) out << c << "\n";
    if (!out) throw std::runtime_error("write failed: " + temp.string());
  }
  std::filesystem::rename(temp, target);
  return target;
}

CoefficientTable cache_read(ProductKind kind, int n, const std::filesystem::path& dir) {
  const std::filesystem::path file = dir / cache_file_name(kind, n);
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open cache file: " + file.string());

  std::string header;
  std::getline(in, header);
  std::ostringstream expected;
  expected << "TRIGPROD-COEFFS v1 " << kind_letter(kind) << " n=" << n
           << " N=" << triangular(n);
  if (header != expected.str()) {
    throw integrity_error("cache header mismatch in " + file.string() + ": got \"" + header +
                          "\", expected \"" + expected.str() + "\"");
  }

  CoefficientTable table{kind, n, {}};
  const std::int64_t count = triangular(n) + 1;
  table.coeffs.reserve(static_cast<std::size_t>(count));
  std::string line;
  for (std::int64_t i = 0; i < count; ++i) {
    if (!std::getline(in, line) || line.empty()) {
      throw integrity_error("cache truncated: expected " + std::to_string(count) +
                            " coefficient lines in " + file.string());
    }
    try {
      table.coeffs.emplace_back(line);
    } catch (const std::exception&) {
      throw integrity_error("cache line " + std::to_string(i) + " is not a decimal integer in " +
                            file.string());
    }
  }
  if (std::getline(in, line) && !line.empty()) {
    throw integrity_error("cache has trailing data past N+1 coefficients in " + file.string());
  }

  if (table.coeffs[0] != 1) {
    throw integrity_error("invariant coeffs[0] = 1 violated in " + file.string());
  }
  BigInt sum = 0;
  for (const BigInt& c : table.coeffs) sum += c;
  if (sum != expected_sum(kind, n)) {
    throw integrity_error(std::string("sum invariant violated in ") + file.string() +
                          " (expected " + (kind == ProductKind::P ? "0" : "2^n") + ")");
  }
  return table;
}

}  // namespace trigprod
