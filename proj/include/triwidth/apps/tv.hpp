#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "triwidth/skeleton.hpp"
#include "triwidth/tdecomp.hpp"
#include "triwidth/triangulation.hpp"

namespace triwidth::apps {

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;

// Colours are numerators a of a/2, a in 0..r-2.
using Sextuple = std::array<int, 6>;

// Tetrahedron edge slots in weight order 01 02 12 23 13 03.
inline constexpr std::array<std::array<int, 2>, 6> kTvEdges{{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}}};

struct TvTable {
  int r = 3;
  Complex q0{1, 0};
  Complex alpha{1, 0};
  std::vector<Complex> beta;         // by numerator
  std::map<Sextuple, Complex> gamma;  // admissible sextuples

  const Complex& gamma_at(const Sextuple& s) const;
};

// Numerators; throws ValidationError outside 0..r-2.
bool tv_admissible(int r, int a, int b, int c);
// All four faces 012, 123, 013, 023 in weight order.
bool tv_admissible_tet(int r, const Sextuple& s);
std::vector<Sextuple> admissible_sextuples(int r);

// "0", "1/2", "1", ... <-> numerators.
std::string half_string(int numerator);
int parse_half(const std::string& text);

TvTable unit_tv_table(int r);
TvTable parse_tv_table(const std::string& json_text);
TvTable load_tv_table(const std::string& path);
std::string tv_table_json(const TvTable& table);

// Sum over admissible colourings; requires a closed 3-dimensional triangulation.
Complex tv_bruteforce(const Triangulation& t, const Skeleton& sk, const TvTable& table, int jobs = 1);
Complex tv_dp(const Triangulation& t, const Skeleton& sk, const TvTable& table, const TreeDecomposition& td);
// Number of admissible colourings, exactly.
BigInt tv_count_bruteforce(const Triangulation& t, const Skeleton& sk, int r, int jobs = 1);
BigInt tv_count_dp(const Triangulation& t, const Skeleton& sk, int r, const TreeDecomposition& td);

}  // namespace triwidth::apps
