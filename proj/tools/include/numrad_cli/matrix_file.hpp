#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "numrad/matrix.hpp"

namespace numrad::cli {

/// {"n": n, "entries": [[re, im], ...]} with n*n row-major pairs. Doubles are
/// written in shortest round-trip form, so save/load is bit-exact.
std::string matrix_to_json(const ComplexMatrix& m);
/// Throws InvalidArgument on malformed documents.
ComplexMatrix matrix_from_json(std::string_view text);

/// Throws IoError when the file cannot be read or written.
ComplexMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace numrad::cli
