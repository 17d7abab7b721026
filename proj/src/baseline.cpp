#include "lagverify/baseline.hpp"

namespace lagverify {

const PaperBaseline& paper_baseline() {
  static const PaperBaseline baseline = [] {
    PaperBaseline b;
    b.printed_T1 = {
        {2, 3},   {6, 3},   {4, 5},   {2, 7},   {4, 7},   {8, 11},  {72, 11},
        {8, 13},  {3, 15},  {2, 15},  {10, 15}, {4, 15},  {12, 15}, {8, 15},
        {16, 17}, {272, 17}, {16, 19}, {6, 23},  {4, 23},  {16, 23}, {16, 24},
        {16, 26}, {8, 27},  {216, 29}, {16, 19}, {786600, 25}, {786600, 26},
    };
    b.printed_X = {
        {6, 3},   {4, 5},   {8, 11},  {72, 11}, {3, 15},     {10, 15},    {4, 15}, {12, 15},
        {8, 15},  {16, 17}, {272, 17}, {8, 27},  {16, 29},    {786600, 25}, {786600, 26},
    };
    b.triples = exceptional_triples();
    b.theorem_triples = {{4, 2, 7}, {4, 2, 23}, {9, 2, 19}, {16, 2, 14}, {16, 3, 19}, {10, 5, 4}};
    b.quadratic_claims = {{3, {}}, {7, {0}}, {15, {}}};
    return b;
  }();
  return baseline;
}

std::vector<Pair> corollary_direct_pairs() {
  return {{4, 7}, {4, 23}, {9, 19}, {16, 14}, {16, 19}, {10, 4}, {2, 7}};
}

}  // namespace lagverify
