#include "numrad_cli/matrix_file.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "numrad/errors.hpp"

namespace numrad::cli {

using json = nlohmann::ordered_json;

std::string matrix_to_json(const ComplexMatrix& m) {
  json j;
  j["n"] = m.size();
  j["entries"] = json::array();
  for (const auto& z : m.entries()) j["entries"].push_back({z.real(), z.imag()});
  return j.dump() + "\n";
}

ComplexMatrix matrix_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed matrix file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw InvalidArgument("matrix file needs keys \"n\" and \"entries\"");
  const auto& jn = j["n"];
  if (!jn.is_number_unsigned() || jn.get<std::size_t>() == 0)
    throw InvalidArgument("matrix file: \"n\" must be a positive integer");
  const std::size_t n = jn.get<std::size_t>();
  const auto& je = j["entries"];
  if (!je.is_array() || je.size() != n * n)
    throw InvalidArgument("matrix file: \"entries\" must hold n*n pairs");
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& pair : je) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw InvalidArgument("matrix file: each entry must be a [re, im] pair of numbers");
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexMatrix(n, std::move(entries));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

ComplexMatrix load_matrix(const std::filesystem::path& path) { return matrix_from_json(read_file(path)); }

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) { write_file(path, matrix_to_json(m)); }

}  // namespace numrad::cli
