#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "stqm/errors.hpp"
#include "stqm/io.hpp"

using namespace stqm;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "stqm_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Io, ExportImportRoundTripIsExact) {
  const Grid2D g(16, 12, 0.25, 1.5, -3.0, 7.0);
  std::mt19937 rng(5);
  std::normal_distribution<double> n(0.0, 1e-3);
  const auto f = ComplexField::from_function(g, [&](double, double) { return Complex(n(rng), n(rng)); });
  const fs::path csv = scratch("round.csv");
  export_snapshot(f, csv, {{"time", 1.0}});
  const ComplexField back = import_snapshot(csv, g);
  EXPECT_EQ(max_abs_difference(back, f), 0.0);
  EXPECT_TRUE(fs::exists(metadata_path(csv)));
}

TEST(Io, HeaderRowOrderAndPrecision) {
  const Grid2D g(8, 8, 1.0, 2.0, 0.0, 10.0);
  const auto f = ComplexField::from_function(g, [](double x, double y) { return Complex(x / 3.0, -y); });
  const fs::path csv = scratch("layout.csv");
  export_snapshot(f, csv, {}, 2.0);
  std::ifstream in(csv);
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  EXPECT_EQ(header, "x,y,re,im,abs");
  EXPECT_EQ(first.rfind("0.0000000000000000e+00,1.0000000000000000e+01,", 0), 0u) << first;
  EXPECT_EQ(second.rfind("1.0000000000000000e+00,1.0000000000000000e+01,3.3333333333333331e-01", 0), 0u) << second;
  std::size_t rows = 2;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, g.size());
}

TEST(Io, ZeroFieldWritesZeroColumns) {
  const Grid2D g(8, 8, 1.0, 1.0, 0.0, 0.0);
  const fs::path csv = scratch("zero.csv");
  export_snapshot(ComplexField(g), csv, {});
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto tail = line.substr(line.find(',', line.find(',') + 1) + 1);
    EXPECT_EQ(tail, "0.0000000000000000e+00,0.0000000000000000e+00,0.0000000000000000e+00");
  }
}

TEST(Io, StrideThinsRows) {
  const Grid2D g(16, 16, 1.0, 1.0, 0.0, 0.0);
  const fs::path csv = scratch("stride.csv");
  export_snapshot(ComplexField(g), csv, {}, 1.0, 4);
  std::ifstream in(csv);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 1u + 16u);
}

TEST(Io, FailuresCarryThePath) {
  const Grid2D g(8, 8, 1.0, 1.0, 0.0, 0.0);
  try {
    export_snapshot(ComplexField(g), "/nonexistent/dir/x.csv", {});
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/x.csv"), std::string::npos);
  }
  EXPECT_THROW(import_snapshot("/nonexistent/dir/x.csv", g), IoError);
  const fs::path wrong = scratch("short.csv");
  std::ofstream(wrong) << "x,y,re,im,abs\n0,0,1,0,1\n";
  EXPECT_THROW(import_snapshot(wrong, g), IoError);
}
