#include <gtest/gtest.h>

#include <bit>
#include <filesystem>
#include <limits>

#include "numrad/ensemble.hpp"
#include "numrad/errors.hpp"
#include "numrad_cli/matrix_file.hpp"

using namespace numrad;
using namespace numrad::cli;

namespace {

bool bit_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const auto x = a.entries()[i], y = b.entries()[i];
    if (std::bit_cast<std::uint64_t>(x.real()) != std::bit_cast<std::uint64_t>(y.real())) return false;
    if (std::bit_cast<std::uint64_t>(x.imag()) != std::bit_cast<std::uint64_t>(y.imag())) return false;
  }
  return true;
}

}  // namespace

TEST(MatrixFile, RoundTripIsBitExact) {
  Rng rng(1);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto m = sample_ginibre(n, rng);
    EXPECT_TRUE(bit_equal(matrix_from_json(matrix_to_json(m)), m));
  }
  const ComplexMatrix special{{Complex(-0.0, 0.1), Complex(std::numeric_limits<double>::denorm_min(), -1e308)},
                              {Complex(1.0 / 3.0, std::numeric_limits<double>::max()), Complex(5e-324, -0.0)}};
  EXPECT_TRUE(bit_equal(matrix_from_json(matrix_to_json(special)), special));
}

TEST(MatrixFile, RoundTripThroughDisk) {
  const auto path = std::filesystem::temp_directory_path() / "numrad_matrix_file_test.json";
  Rng rng(2);
  const auto m = sample_ginibre(3, rng);
  save_matrix(path, m);
  EXPECT_TRUE(bit_equal(load_matrix(path), m));
  std::filesystem::remove(path);
}

TEST(MatrixFile, ParsesDocumentedSchema) {
  const auto m = matrix_from_json(R"({"n": 2, "entries": [[2,0],[1,0],[0,0],[1,0]]})");
  EXPECT_EQ(m, (ComplexMatrix{{2, 1}, {0, 1}}));
}

TEST(MatrixFile, RejectsMalformedDocuments) {
  for (const char* doc : {
           "", "{", "[]", R"({"entries": []})", R"({"n": 2})", R"({"n": 0, "entries": []})",
           R"({"n": -1, "entries": []})", R"({"n": 1.5, "entries": [[1,0]]})",
           R"({"n": 2, "entries": [[1,0],[0,0],[0,0]]})", R"({"n": 1, "entries": [[1]]})",
           R"({"n": 1, "entries": [["1", 0]]})", R"({"n": 1, "entries": [1, 0]})",
           R"({"n": 1, "entries": [[1e999, 0]]})"})
    EXPECT_THROW(matrix_from_json(doc), InvalidArgument) << doc;
}

TEST(MatrixFile, MissingFileIsAnIoError) {
  EXPECT_THROW(load_matrix("/nonexistent/dir/matrix.json"), IoError);
}
