#pragma once

#include "eigenfence/matrix.hpp"

// Worked matrices and eigenpairs with their expected transforms.
namespace fixtures {

using eigenfence::Eigenpair;
using eigenfence::RealMatrix;

// 6x6 nonnegative matrix with Perron pair (24, (2,1,1,1,1,1)).
inline RealMatrix perron6() {
    return {{10, 4, 8, 4, 6, 6}, {2, 6, 6, 2, 4, 2}, {1, 4, 8, 4, 2, 4},
            {0, 6, 8, 4, 0, 6},  {4, 4, 6, 0, 2, 4}, {1, 4, 6, 2, 4, 6}};
}
inline Eigenpair perron6_pair() { return {24.0, {2, 1, 1, 1, 1, 1}}; }
inline RealMatrix perron6_b() {
    return {{10, 2, 4, 2, 3, 3}, {4, 6, 6, 2, 4, 2}, {2, 4, 8, 4, 2, 4},
            {0, 6, 8, 4, 0, 6},  {8, 4, 6, 0, 2, 4}, {2, 4, 6, 2, 4, 6}};
}
inline RealMatrix perron6_f() {
    return {{8, -2, -2, 0, 0, -1}, {2, 2, 0, 0, 1, -2}, {0, 0, 2, 2, -1, 0},
            {-2, 2, 2, 2, -3, 2},  {6, 0, 0, -2, -1, 0}, {0, 0, 0, 0, 1, 2}};
}

// Singular 6x6 matrix, eigenpair (0, (1,1,1,2,1,-1)).
inline RealMatrix singular6() {
    return {{-2, 4, 2, 0, -2, 2},       {-2, 2, 2, -2, 0, -2}, {-4, 2, 4, 0, -2, 0},
            {-4, 10, 6, -4, -16, -12}, {0, 4, 8, -4, -6, -2}, {-8, 2, 2, -2, 0, -8}};
}
inline Eigenpair singular6_pair() { return {0.0, {1, 1, 1, 2, 1, -1}}; }
inline RealMatrix singular6_b() {
    return {{-2, 4, 2, 0, -2, -2}, {-2, 2, 2, -4, 0, 2}, {-4, 2, 4, 0, -2, 0},
            {-2, 5, 3, -4, -8, 6},  {0, 4, 8, -8, -6, 2}, {8, -2, -2, 4, 0, -8}};
}

// 3x3 matrix whose second-type region is not inside the classic one.
inline RealMatrix wide3() { return {{9, 1, 1}, {0, 5, 5}, {4, 1, 1}}; }
inline Eigenpair wide3_pair() { return {10.0, {2, 1, 1}}; }

// 7x7 nonnegative matrix with Perron pair (15, (3,2,1,1,1,1,1)).
inline RealMatrix perron7() {
    return {{2, 3, 6, 9, 6, 6, 6}, {2, 2, 4, 0, 4, 6, 6}, {0, 1, 3, 2, 4, 2, 2}, {2, 1, 2, 0, 2, 1, 2},
            {1, 2, 1, 3, 0, 3, 1}, {2, 0, 1, 3, 1, 4, 0}, {0, 3, 3, 2, 1, 2, 1}};
}
inline Eigenpair perron7_pair() { return {15.0, {3, 2, 1, 1, 1, 1, 1}}; }
inline RealMatrix perron7_b() {
    return {{2, 2, 2, 3, 2, 2, 2}, {3, 2, 2, 0, 2, 3, 3}, {0, 2, 3, 2, 4, 2, 2}, {6, 2, 2, 0, 2, 1, 2},
            {3, 4, 1, 3, 0, 3, 1}, {6, 0, 1, 3, 1, 4, 0}, {0, 6, 3, 2, 1, 2, 1}};
}
// Reference pair; column 4 of the two matrices is exchanged relative to
// the construction rule.
inline RealMatrix perron7_f_reference() {
    return {{-1, 0, 0, 1, 0, 0, 0},  {0, 0, 0, -2, 0, 1, 1},   {-3, 0, 1, 0, 2, 0, 0},  {3, 0, 0, -2, 0, -1, 0},
            {0, 2, -1, 1, -2, 1, -1}, {3, -2, -1, 1, -1, 2, -2}, {-3, 4, 1, 0, -1, 0, -1}};
}
inline RealMatrix perron7_g_reference() {
    return {{-1, 0, 0, 0, 0, 0, 0},   {0, 0, 0, -3, 0, 1, 1},    {-3, 0, 1, -1, 2, 0, 0}, {3, 0, 0, -3, 0, -1, 0},
            {0, 2, -1, 0, -2, 1, -1}, {3, -2, -1, 0, -1, 2, -2}, {-3, 4, 1, -1, -1, 0, -1}};
}

// 4x4 matrix with eigenpair (0, (0,0,1,1)); eigenvalues -1, 0, 1, 2.
inline RealMatrix zero_component4() {
    return {{7, -10, -2, 2}, {5, -8, -2, 2}, {-5, 12, 4, -4}, {-1, 4, 1, -1}};
}
inline Eigenpair zero_component4_pair() { return {0.0, {0, 0, 1, 1}}; }
inline RealMatrix zero_component4_c() { return {{2, 2, -2, -2}, {0, 4, -2, -2}, {-5, 12, -3, -4}, {-1, 4, -2, -1}}; }
inline RealMatrix zero_component4_f() { return {{3, -2, 0, 0}, {1, 0, 0, 0}, {-4, 8, -1, -2}, {0, 0, 0, 1}}; }

// 4x4 nonnegative matrix with Perron pair (24, (1,2,2,1)); others -6, -2, -2.
inline RealMatrix perron4() { return {{4, 3, 4, 6}, {8, 4, 8, 16}, {16, 8, 2, 12}, {6, 3, 4, 4}}; }
inline Eigenpair perron4_pair() { return {24.0, {1, 2, 2, 1}}; }
inline RealMatrix perron4_b() { return {{4, 6, 8, 6}, {4, 4, 8, 8}, {8, 8, 2, 6}, {6, 6, 8, 4}}; }
inline RealMatrix perron4_f() { return {{-2, 0, 0, 0}, {-2, -2, 0, 2}, {2, 2, -6, 0}, {0, 0, 0, -2}}; }

// Singular 7x7 matrix with eigenpair (0, (1,2,3,1,2,2,1)).
inline RealMatrix singular7() {
    return {{-18, 3, 2, 0, 3, 0, 0},   {12, -18, 0, 12, 0, 0, 12}, {18, 0, -24, 18, 0, 9, 18},
            {0, 3, 2, -24, 3, 3, 0},   {12, 0, 0, 12, -18, 6, 0},  {0, 0, 4, 12, 6, -24, 12},
            {0, 3, 2, 0, 0, 3, -18}};
}
inline Eigenpair singular7_pair() { return {0.0, {1, 2, 3, 1, 2, 2, 1}}; }
inline RealMatrix singular7_b() {
    return {{-18, 6, 6, 0, 6, 0, 0},  {6, -18, 0, 6, 0, 0, 6},  {6, 0, -24, 6, 0, 6, 6},
            {0, 6, 6, -24, 6, 6, 0},  {6, 0, 0, 6, -18, 6, 0},  {0, 0, 6, 6, 6, -24, 6},
            {0, 6, 6, 0, 0, 6, -18}};
}

// 3x3 matrix with eigenpair (7, (1,7,3)); others 0 and -2.
inline RealMatrix small3() { return {{0, 1, 0}, {2, 5, 4}, {0, 3, 0}}; }
inline Eigenpair small3_pair() { return {7.0, {1, 7, 3}}; }

// Constant row-sum 3x3 matrix, row sum 24; others -6 and 5.
inline RealMatrix row_sum3() { return {{12, 6, 6}, {3, 3, 18}, {8, 8, 8}}; }
inline Eigenpair row_sum3_pair() { return {24.0, {1, 1, 1}}; }
inline RealMatrix row_sum3_f() { return {{4, -2, -12}, {-5, -5, 0}, {0, 0, -10}}; }
inline RealMatrix row_sum3_g() { return {{9, 0, 0}, {0, -3, 12}, {5, 2, 2}}; }

}  // namespace fixtures
