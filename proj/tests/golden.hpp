#pragma once

#include <string>
#include <vector>

#include "eic/hypergraph.hpp"

// Known-good hyperedge tables for the closed-form even-n constructions,
// indexed e1.. in construction order, each row sorted ascending.
namespace golden {

inline const std::vector<eic::Hyperedge> table24 = {
    {1, 2, 3, 7, 8, 9},     {2, 3, 4, 16, 17, 18},  {3, 4, 5, 13, 14, 15},
    {4, 5, 6, 22, 23, 24},  {9, 10, 11, 15, 16, 17}, {1, 2, 10, 11, 12, 24},
    {11, 12, 13, 21, 22, 23}, {6, 7, 8, 12, 13, 14}, {1, 17, 18, 19, 23, 24},
    {8, 9, 10, 18, 19, 20}, {5, 6, 7, 19, 20, 21},  {14, 15, 16, 20, 21, 22},
};

inline const std::vector<eic::Hyperedge> table26 = {
    {1, 2, 3, 8, 9, 10},    {2, 3, 4, 17, 18, 19},  {3, 4, 5, 14, 15, 16},
    {4, 5, 6, 23, 24, 25},  {1, 2, 5, 6, 7, 26},    {10, 11, 12, 16, 17, 18},
    {1, 11, 12, 13, 25, 26}, {12, 13, 14, 22, 23, 24}, {7, 8, 9, 13, 14, 15},
    {18, 19, 20, 24, 25, 26}, {9, 10, 11, 19, 20, 21}, {6, 7, 8, 20, 21, 22},
    {15, 16, 17, 21, 22, 23},
};

inline const std::vector<eic::Hyperedge> table28 = {
    {1, 2, 3, 8, 9, 10},    {2, 3, 4, 19, 20, 21},  {3, 4, 5, 16, 17, 18},
    {4, 5, 6, 25, 26, 27},  {1, 2, 5, 6, 7, 28},    {11, 12, 13, 18, 19, 20},
    {1, 12, 13, 14, 27, 28}, {13, 14, 15, 24, 25, 26}, {7, 8, 9, 14, 15, 16},
    {10, 11, 12, 15, 16, 17}, {20, 21, 22, 26, 27, 28}, {9, 10, 11, 21, 22, 23},
    {6, 7, 8, 22, 23, 24},  {17, 18, 19, 23, 24, 25},
};

inline const std::vector<eic::Hyperedge> table32 = {
    {1, 2, 3, 7, 8, 9},     {2, 3, 4, 13, 14, 15},  {3, 4, 5, 16, 17, 18},
    {4, 5, 6, 30, 31, 32},  {9, 10, 11, 15, 16, 17}, {10, 11, 12, 21, 22, 23},
    {11, 12, 13, 24, 25, 26}, {6, 7, 8, 12, 13, 14}, {17, 18, 19, 23, 24, 25},
    {18, 19, 20, 29, 30, 31}, {1, 2, 19, 20, 21, 32}, {14, 15, 16, 20, 21, 22},
    {1, 25, 26, 27, 31, 32}, {5, 6, 7, 26, 27, 28},  {8, 9, 10, 27, 28, 29},
    {22, 23, 24, 28, 29, 30},
};

inline const std::vector<eic::Hyperedge> table34 = {
    {1, 2, 3, 8, 9, 10},    {2, 3, 4, 14, 15, 16},  {3, 4, 5, 17, 18, 19},
    {4, 5, 6, 31, 32, 33},  {1, 2, 5, 6, 7, 34},    {10, 11, 12, 16, 17, 18},
    {11, 12, 13, 22, 23, 24}, {12, 13, 14, 25, 26, 27}, {7, 8, 9, 13, 14, 15},
    {18, 19, 20, 24, 25, 26}, {19, 20, 21, 30, 31, 32}, {1, 20, 21, 22, 33, 34},
    {15, 16, 17, 21, 22, 23}, {26, 27, 28, 32, 33, 34}, {6, 7, 8, 27, 28, 29},
    {9, 10, 11, 28, 29, 30}, {23, 24, 25, 29, 30, 31},
};

// The 24 generating intersections of the n = 24 realization, one line per
// cycle edge starting at {1,2}.
inline const std::string certificate24 =
    "e1 ∩ e6 = {1,2}\n"
    "e1 ∩ e2 = {2,3}\n"
    "e2 ∩ e3 = {3,4}\n"
    "e3 ∩ e4 = {4,5}\n"
    "e4 ∩ e11 = {5,6}\n"
    "e8 ∩ e11 = {6,7}\n"
    "e1 ∩ e8 = {7,8}\n"
    "e1 ∩ e10 = {8,9}\n"
    "e5 ∩ e10 = {9,10}\n"
    "e5 ∩ e6 = {10,11}\n"
    "e6 ∩ e7 = {11,12}\n"
    "e7 ∩ e8 = {12,13}\n"
    "e3 ∩ e8 = {13,14}\n"
    "e3 ∩ e12 = {14,15}\n"
    "e5 ∩ e12 = {15,16}\n"
    "e2 ∩ e5 = {16,17}\n"
    "e2 ∩ e9 = {17,18}\n"
    "e9 ∩ e10 = {18,19}\n"
    "e10 ∩ e11 = {19,20}\n"
    "e11 ∩ e12 = {20,21}\n"
    "e7 ∩ e12 = {21,22}\n"
    "e4 ∩ e7 = {22,23}\n"
    "e4 ∩ e9 = {23,24}\n"
    "e6 ∩ e9 = {24,1}\n";

inline eic::Hypergraph hypergraph24() { return {24, table24}; }

}  // namespace golden
