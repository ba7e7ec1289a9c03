#pragma once

// Worked examples, n = 12 each. Series are kept verbatim alongside their
// reference values (4 decimals). Trend labels attached to the larger examples
// are not reliable, so reference values are listed in source order and
// compared as multisets unless a test says otherwise.

#include <string>
#include <vector>

namespace orthotrend::fixtures {

struct ReferenceSet {
  std::string name;
  std::vector<std::vector<double>> columns;
  std::vector<double> delta;
  std::vector<double> iota;
  std::vector<double> p;  // 0.0 stands for a printed "<0.0001"
};

inline std::vector<double> ascending() { return {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23}; }
inline std::vector<double> descending() { return {23, 21, 19, 17, 15, 13, 11, 9, 7, 5, 3, 1}; }

// N = 2. Printed order: (++/--, +-/-+); iota is tau for ++/--.
inline std::vector<ReferenceSet> bivariate_series() {
  return {
      {"bivariate identical", {ascending(), ascending()}, {1.0, 0.0}, {1.0, -1.0}, {0.0, 0.0}},
      {"bivariate reversed",
       {{1, 3, 9, 7, 15, 13, 21, 23, 5, 11, 17, 19}, {23, 21, 15, 17, 9, 11, 3, 1, 19, 13, 7, 5}},
       {0.0, 1.0},
       {-1.0, 1.0},
       {0.0, 0.0}},
      {"bivariate strong",
       {ascending(), {1, 5, 9, 11, 6, 13, 17, 12, 22, 20, 25, 23}},
       {0.9091, 0.0909},
       {0.8182, -0.8182},
       {0.0002, 0.0002}},
      {"bivariate random",
       {{5, 8, 9, 16, 12, 1, 14, 3, 15, 21, 13, 1}, {7, 15, 3, 20, 24, 23, 24, 20, 21, 5, 23, 15}},
       {0.4918, 0.5082},
       {-0.0164, 0.0164},
       {0.9409, 0.9409}},
  };
}

// N = 3.
inline std::vector<ReferenceSet> trivariate_series() {
  return {
      {"trivariate +++", {ascending(), ascending(), ascending()},
       {1.0, 0.0, 0.0, 0.0}, {1.0, -1.0, -1.0, -1.0}, {0.0, 0.0, 0.0, 0.0}},
      {"trivariate +-+", {ascending(), descending(), ascending()},
       {0.0, 0.0, 1.0, 0.0}, {-1.0, -1.0, 1.0, -1.0}, {0.0, 0.0, 0.0, 0.0}},
      {"trivariate +--", {ascending(), descending(), descending()},
       {0.0, 1.0, 0.0, 0.0}, {-1.0, 1.0, -1.0, -1.0}, {0.0, 0.0, 0.0, 0.0}},
      {"trivariate partial",
       {{23, 12, 19, 12, 9, 5, 3, 1, 20, 7, 12, 17},
        {2, 13, 5, 10, 15, 4, 20, 23, 3, 17, 11, 8},
        {22, 11, 19, 15, 4, 8, 3, 1, 21, 6, 13, 17}},
       {0.1111, 0.0000, 0.8889, 0.0000},
       {-0.3502, -0.5378, 0.8511, -0.5378},
       {0.1610, 0.0192, 0.0002, 0.0192}},
      {"trivariate random",
       {{19, 8, 6, 16, 7, 9, 13, 4, 14, 10, 11, 22},
        {1, 4, 4, 7, 13, 5, 20, 12, 17, 23, 23, 19},
        {16, 22, 1, 2, 22, 23, 11, 9, 2, 20, 10, 5}},
       {0.2419, 0.2742, 0.1613, 0.3226},
       {-0.0130, 0.0302, -0.1189, 0.0958},
       {0.9530, 0.8915, 0.5905, 0.6647}},
  };
}

// N = 4.
inline std::vector<ReferenceSet> four_variable_series() {
  return {
      {"four-variable structured", {descending(), descending(), ascending(), descending()},
       {0, 0, 0, 0, 1, 0, 0, 0},
       {-1, -1, -1, -1, 1, -1, -1, -1},
       {0, 0, 0, 0, 0, 0, 0, 0}},
      {"four-variable random",
       {{12, 3, 6, 11, 10, 9, 21, 22, 4, 7, 23, 4},
        {15, 13, 1, 9, 19, 5, 9, 11, 8, 23, 18, 9},
        {10, 1, 2, 14, 18, 11, 12, 16, 7, 5, 13, 6},
        {6, 10, 17, 4, 18, 5, 22, 13, 15, 14, 2, 11}},
       {0.1905, 0.0635, 0.1429, 0.0635, 0.0476, 0.1429, 0.0476, 0.3016},
       {0.0712, -0.0745, 0.0163, -0.0745, -0.0925, 0.0163, -0.0925, 0.2006},
       {0.7473, 0.7361, 0.9413, 0.7361, 0.6755, 0.9413, 0.6755, 0.3639}},
      {"four-variable partial",
       {ascending(),
        {23, 21, 22, 17, 16, 13, 15, 9, 4, 5, 3, 2},
        {1, 6, 5, 7, 9, 25, 13, 2, 17, 22, 11, 23},
        {20, 23, 19, 17, 15, 9, 11, 10, 7, 6, 3, 5}},
       {0.0000, 0.1818, 0.0303, 0.0152, 0.0152, 0.7273, 0.0152, 0.0152},
       {-0.2034, 0.0197, -0.1657, -0.1845, -0.1845, 0.6872, -0.1845, -0.1845},
       {0.3573, 0.9291, 0.4533, 0.4037, 0.4037, 0.0019, 0.4037, 0.4037}},
  };
}

// N = 5, second dataset (the first one's printed rows are interleaved with the
// second's; only the headline values are used).
inline std::vector<std::vector<double>> five_variable_structured() {
  return {{23, 15, 19, 5, 12, 13, 8, 9, 2, 5, 3, 1},
          {21, 25, 19, 15, 17, 9, 11, 10, 7, 2, 3, 5},
          {10, 3, 5, 2, 9, 11, 10, 15, 17, 25, 21, 23},
          {1, 5, 3, 7, 9, 11, 10, 15, 17, 20, 21, 23},
          {4, 3, 5, 7, 10, 11, 13, 19, 17, 16, 21, 23}};
}

inline std::vector<std::vector<double>> five_variable_random() {
  return {{22, 14, 12, 7, 21, 11, 9, 23, 17, 6, 18, 20},
          {9, 2, 18, 10, 16, 21, 7, 4, 17, 22, 19, 14},
          {16, 21, 15, 5, 18, 13, 20, 7, 17, 2, 19, 9},
          {6, 16, 15, 8, 5, 17, 10, 12, 3, 11, 4, 18},
          {8, 2, 22, 19, 15, 11, 3, 23, 14, 7, 16, 21}};
}

// Printed delta multiset of the random N = 5 dataset.
inline std::vector<double> five_variable_random_delta() {
  return {0.0455, 0.0000, 0.0909, 0.0000, 0.0606, 0.1212, 0.1212, 0.0758,
          0.0000, 0.0758, 0.1364, 0.0000, 0.1364, 0.0758, 0.0455, 0.0152};
}

// N = 6.
inline std::vector<std::vector<double>> six_variable_series() {
  return {{10, 19, 7, 9, 1, 17, 6, 23, 3, 8, 13, 11},
          {9, 5, 17, 15, 23, 7, 3, 1, 21, 19, 11, 13},
          {9, 5, 17, 15, 23, 10, 3, 1, 18, 19, 11, 18},
          {9, 5, 12, 15, 23, 7, 8, 1, 22, 19, 11, 13},
          {9, 10, 17, 15, 20, 7, 3, 1, 21, 19, 11, 13},
          {15, 19, 7, 9, 1, 17, 21, 23, 3, 5, 13, 20}};
}

}  // namespace orthotrend::fixtures
