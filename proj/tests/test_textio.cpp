#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "qcy/textio.hpp"

using namespace qcy;
using testutil::cycle123;
using testutil::idp;
using testutil::im;
using testutil::swap23;

TEST_CASE("row-slash matrix parsing") {
  CHECK(mat_eq(textio::parse_matrix("1 1 1/1 0 2/1 2 0"), im({{1, 1, 1}, {1, 0, 2}, {1, 2, 0}})));
  CHECK(mat_eq(textio::parse_matrix("1,1/0,1"), im({{1, 1}, {0, 1}})));
  CHECK(mat_eq(textio::parse_matrix("  3  "), im({{3}})));
  CHECK(mat_eq(textio::parse_matrix("-1 2/0 -7"), im({{-1, 2}, {0, -7}})));
  // rectangular input is allowed at this layer
  IMat r = textio::parse_matrix("1 2 3/4 5 6");
  CHECK(r.rows() == 2);
  CHECK(r.cols() == 3);

  CHECK_THROWS_AS(textio::parse_matrix("1 2/3"), std::invalid_argument);
  CHECK_THROWS_AS(textio::parse_matrix("1 x/0 1"), std::invalid_argument);
  CHECK_THROWS_AS(textio::parse_matrix(""), std::invalid_argument);
  CHECK_THROWS_AS(textio::parse_matrix("1 2//3 4"), std::invalid_argument);
}

TEST_CASE("matrix rendering round-trips") {
  for (const IMat& m : {im({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), im({{2}}), im({{1, 4}, {1, 0}})}) {
    std::string s = textio::matrix_to_string(m);
    CHECK(mat_eq(textio::parse_matrix(s), m));
  }
  CHECK(textio::matrix_to_string(im({{0, 3}, {1, 0}})) == "0 3/1 0");
}

TEST_CASE("permutation specs use 1-based labels") {
  CHECK(mat_eq(textio::parse_perm("id", 3), idp(3)));
  CHECK(mat_eq(textio::parse_perm("id", 2), idp(2)));
  CHECK(mat_eq(textio::parse_perm("swap", 2), im({{0, 1}, {1, 0}})));
  CHECK(mat_eq(textio::parse_perm("swap=2,3", 3), swap23()));
  CHECK(mat_eq(textio::parse_perm("swap=1,3", 3), im({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})));
  CHECK(mat_eq(textio::parse_perm("cycle", 3), cycle123()));
  CHECK(mat_eq(textio::parse_perm("cycle=1,3,2", 3), im({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})));

  CHECK_THROWS_AS(textio::parse_perm("swap=1,1", 3), std::invalid_argument);
  CHECK_THROWS_AS(textio::parse_perm("swap=0,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(textio::parse_perm("swap=2,4", 3), std::invalid_argument);
  CHECK_THROWS_AS(textio::parse_perm("cycle", 2), std::invalid_argument);
  CHECK_THROWS_AS(textio::parse_perm("shuffle", 3), std::invalid_argument);
}

TEST_CASE("matrix files accept comments and both layouts") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();

  fs::path rowwise = dir / "qcy_test_rows.txt";
  {
    std::ofstream out(rowwise);
    out << "# a comment line\n\n0 1 1\n1 0 1\n1 1 0\n";
  }
  CHECK(mat_eq(textio::load_matrix_file(rowwise.string()), im({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})));
  fs::remove(rowwise);

  fs::path slashed = dir / "qcy_test_slash.txt";
  {
    std::ofstream out(slashed);
    out << "# markov instance\n0 3 0/0 0 3/3 0 0\n";
  }
  CHECK(mat_eq(textio::load_matrix_file(slashed.string()), im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}})));
  fs::remove(slashed);

  CHECK_THROWS_AS(textio::load_matrix_file((dir / "qcy_absent.txt").string()),
                  std::invalid_argument);
}
