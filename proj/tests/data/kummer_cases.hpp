#pragma once

// Reference bound slates for covers y^m = prod (x - a_k)^{lambda_k} with
// lambda_1 = 1 and the distinguished place above x = a_1. Every column is an
// exact integer; `yl` follows the branch picked by gcd(m, lambda_0 mod m).

#include <cstdint>
#include <vector>

namespace semibound::testdata {

struct KummerCase {
  int64_t q;
  int64_t m;
  std::vector<int64_t> lambdas;      // lambda_1..lambda_r
  std::vector<int64_t> generators;   // minimal generators of H(Q_1)
  int64_t genus;
  int64_t gm;
  int64_t lewittes;
  int64_t hws;
  int64_t yl;
  int64_t ihara;
};

// three-root covers
inline const std::vector<KummerCase> kThreeRootCases = {
    {37, 27, {1, 3, 3}, {8, 9, 31}, 24, 295, 297, 326, 922, 299},
    {37, 32, {1, 7, 28}, {8, 9}, 28, 294, 297, 374, 1123, 333},
    {37, 34, {1, 3, 3}, {10, 11, 34, 39}, 33, 366, 371, 434, 1160, 374},
    {41, 24, {1, 3, 3}, {7, 8}, 21, 287, 288, 294, 916, 297},
    {41, 35, {1, 7, 31}, {9, 10, 35}, 31, 367, 370, 414, 1334, 386},
    {41, 40, {1, 4, 4}, {9, 10}, 36, 366, 370, 474, 1524, 430},
    {79, 50, {1, 9, 45}, {10, 11}, 45, 789, 791, 845, 3853, 830},
};

// four-root covers
inline const std::vector<KummerCase> kFourRootCases = {
    {13, 10, {1, 5, 8, 8}, {5, 6}, 10, 64, 66, 84, 104, 73},
    {13, 11, {1, 3, 6, 6}, {7, 9, 11}, 15, 91, 92, 119, 104, 97},
};

}  // namespace semibound::testdata
