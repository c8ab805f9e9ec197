#pragma once

// Heights arrays (row = first coordinate) and edge lists used as fixtures.

#include <utility>
#include <vector>

namespace fig {

using H = std::vector<std::vector<int>>;
using Edges = std::vector<std::pair<int, int>>;

inline const H sc_example = {{6, 6, 6, 6, 5, 0},
     {6, 6, 4, 4, 4, 0},
     {6, 6, 3, 3, 1, 0},
     {6, 5, 3, 3, 0, 0},
     {6, 2, 2, 2, 0, 0},
     {6, 1, 0, 0, 0, 0}};

inline const H cssc_example = {{6, 5, 5, 5, 5, 5},
     {6, 5, 5, 3, 3, 0},
     {6, 5, 5, 3, 3, 0},
     {6, 3, 3, 1, 1, 0},
     {6, 3, 3, 1, 1, 0},
     {1, 1, 1, 1, 1, 0}};

inline const H tssc_example = {{6, 6, 6, 4, 3, 3},
     {6, 6, 6, 4, 3, 3},
     {6, 6, 4, 3, 2, 2},
     {4, 4, 3, 2, 0, 0},
     {3, 3, 2, 0, 0, 0},
     {3, 3, 2, 0, 0, 0}};

inline const std::vector<H> sc_graph = {
    {{4, 4, 4},
     {0, 0, 0}},
    {{4, 4, 3},
     {1, 0, 0}},
    {{4, 4, 2},
     {2, 0, 0}},
    {{4, 4, 1},
     {3, 0, 0}},
    {{4, 4, 0},
     {4, 0, 0}},
    {{4, 3, 3},
     {1, 1, 0}},
    {{4, 3, 2},
     {2, 1, 0}},
    {{4, 3, 1},
     {3, 1, 0}},
    {{4, 3, 0},
     {4, 1, 0}},
    {{4, 2, 2},
     {2, 2, 0}},
    {{4, 2, 1},
     {3, 2, 0}},
    {{4, 2, 0},
     {4, 2, 0}},
    {{3, 3, 3},
     {1, 1, 1}},
    {{3, 3, 2},
     {2, 1, 1}},
    {{3, 3, 1},
     {3, 1, 1}},
    {{3, 2, 2},
     {2, 2, 1}},
    {{3, 2, 1},
     {3, 2, 1}},
    {{2, 2, 2},
     {2, 2, 2}},
};

inline const Edges sc_graph_edges = {{0, 1}, {1, 2}, {1, 5}, {2, 3}, {2, 6}, {3, 4}, {3, 7}, {4, 8}, {5, 6}, {5, 12}, {6, 7}, {6, 9}, {6, 13}, {7, 8}, {7, 10}, {7, 14}, {8, 11}, {9, 10}, {9, 15}, {10, 11}, {10, 16}, {12, 13}, {13, 14}, {13, 15}, {14, 16}, {15, 16}, {15, 17}};

inline const H sc_diameter1_left = {{4, 4, 4, 0, 0, 0},
     {4, 4, 4, 0, 0, 0},
     {4, 4, 4, 0, 0, 0},
     {4, 4, 4, 0, 0, 0},
     {4, 4, 4, 0, 0, 0}};

inline const H sc_diameter1_right = {{2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 2, 2}};

inline const H sc_diameter2_left = {{4, 4, 4, 4, 4, 4, 4},
     {4, 4, 4, 4, 4, 4, 0},
     {4, 4, 4, 2, 0, 0, 0},
     {4, 0, 0, 0, 0, 0, 0},
     {0, 0, 0, 0, 0, 0, 0}};

inline const H sc_diameter2_right = {{2, 2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 2, 2, 2}};

inline const H sc_center_684 = {{4, 4, 4, 4, 2, 2, 2, 2},
     {4, 4, 4, 4, 2, 2, 2, 2},
     {4, 4, 4, 4, 2, 2, 2, 2},
     {2, 2, 2, 2, 0, 0, 0, 0},
     {2, 2, 2, 2, 0, 0, 0, 0},
     {2, 2, 2, 2, 0, 0, 0, 0}};

inline const std::vector<H> cssc_graph = {
    {{4, 4, 3, 2},
     {4, 3, 2, 1},
     {3, 2, 1, 0},
     {2, 1, 0, 0}},
    {{4, 4, 2, 2},
     {4, 4, 2, 2},
     {2, 2, 0, 0},
     {2, 2, 0, 0}},
    {{4, 4, 4, 1},
     {3, 3, 2, 1},
     {3, 2, 1, 1},
     {3, 0, 0, 0}},
    {{4, 3, 3, 3},
     {4, 3, 2, 0},
     {4, 2, 1, 0},
     {1, 1, 1, 0}},
};

inline const Edges cssc_graph_edges = {{0, 1}, {0, 2}, {0, 3}};

inline const H cssc_diameter_left = {{10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0}};

inline const H cssc_diameter_right = {{10, 10, 10, 10, 10, 10, 10, 10, 10, 1},
     {9, 9, 9, 9, 9, 9, 9, 9, 2, 1},
     {9, 8, 8, 8, 8, 8, 8, 3, 2, 1},
     {9, 8, 7, 7, 7, 7, 4, 3, 2, 1},
     {9, 8, 7, 6, 6, 5, 4, 3, 2, 1},
     {9, 8, 7, 6, 5, 4, 4, 3, 2, 1},
     {9, 8, 7, 6, 3, 3, 3, 3, 2, 1},
     {9, 8, 7, 2, 2, 2, 2, 2, 2, 1},
     {9, 8, 1, 1, 1, 1, 1, 1, 1, 1},
     {9, 0, 0, 0, 0, 0, 0, 0, 0, 0}};

inline const H cssc_center_r5 = {{10, 10, 10, 10, 10, 9, 8, 7, 6, 5},
     {10, 10, 10, 10, 9, 8, 7, 6, 5, 4},
     {10, 10, 10, 9, 8, 7, 6, 5, 4, 3},
     {10, 10, 9, 8, 7, 6, 5, 4, 3, 2},
     {10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
     {9, 8, 7, 6, 5, 4, 3, 2, 1, 0},
     {8, 7, 6, 5, 4, 3, 2, 1, 0, 0},
     {7, 6, 5, 4, 3, 2, 1, 0, 0, 0},
     {6, 5, 4, 3, 2, 1, 0, 0, 0, 0},
     {5, 4, 3, 2, 1, 0, 0, 0, 0, 0}};

inline const H cssc_shells1 = {{8, 8, 6, 6, 6, 6, 6, 6},
     {8, 8, 6, 6, 6, 6, 6, 6},
     {8, 8, 6, 6, 6, 3, 0, 0},
     {8, 8, 5, 5, 4, 3, 0, 0},
     {8, 8, 5, 4, 3, 3, 0, 0},
     {8, 8, 5, 2, 2, 2, 0, 0},
     {2, 2, 2, 2, 2, 2, 0, 0},
     {2, 2, 2, 2, 2, 2, 0, 0}};

inline const H cssc_shells3_0 = {{10, 10, 10, 10, 10, 10, 10, 10, 10, 1},
     {9, 9, 9, 7, 7, 7, 7, 7, 7, 1},
     {9, 9, 9, 7, 7, 7, 7, 7, 7, 1},
     {9, 9, 9, 7, 7, 7, 4, 1, 1, 1},
     {9, 9, 9, 6, 6, 5, 4, 1, 1, 1},
     {9, 9, 9, 6, 5, 4, 4, 1, 1, 1},
     {9, 9, 9, 6, 3, 3, 3, 1, 1, 1},
     {9, 3, 3, 3, 3, 3, 3, 1, 1, 1},
     {9, 3, 3, 3, 3, 3, 3, 1, 1, 1},
     {9, 0, 0, 0, 0, 0, 0, 0, 0, 0}};

inline const H cssc_shells3_1 = {{10, 9, 9, 9, 9, 9, 9, 9, 9, 9},
     {10, 9, 9, 7, 7, 7, 7, 7, 7, 0},
     {10, 9, 9, 7, 7, 7, 7, 7, 7, 0},
     {10, 9, 9, 7, 7, 7, 4, 1, 1, 0},
     {10, 9, 9, 6, 6, 5, 4, 1, 1, 0},
     {10, 9, 9, 6, 5, 4, 4, 1, 1, 0},
     {10, 9, 9, 6, 3, 3, 3, 1, 1, 0},
     {10, 3, 3, 3, 3, 3, 3, 1, 1, 0},
     {10, 3, 3, 3, 3, 3, 3, 1, 1, 0},
     {1, 1, 1, 1, 1, 1, 1, 1, 1, 0}};

inline const H cssc_shells3_2 = {{10, 10, 10, 7, 7, 7, 7, 7, 7, 7},
     {10, 10, 10, 7, 7, 7, 7, 7, 7, 7},
     {10, 10, 10, 7, 7, 7, 7, 7, 7, 7},
     {10, 10, 10, 7, 7, 7, 4, 0, 0, 0},
     {10, 10, 10, 6, 6, 5, 4, 0, 0, 0},
     {10, 10, 10, 6, 5, 4, 4, 0, 0, 0},
     {10, 10, 10, 6, 3, 3, 3, 0, 0, 0},
     {3, 3, 3, 3, 3, 3, 3, 0, 0, 0},
     {3, 3, 3, 3, 3, 3, 3, 0, 0, 0},
     {3, 3, 3, 3, 3, 3, 3, 0, 0, 0}};

inline const std::vector<H> cssc_tree = {
    {{2, 1},
     {1, 0}},
    {{4, 4, 4, 1},
     {3, 3, 2, 1},
     {3, 2, 1, 1},
     {3, 0, 0, 0}},
    {{4, 3, 3, 3},
     {4, 3, 2, 0},
     {4, 2, 1, 0},
     {1, 1, 1, 0}},
    {{4, 4, 2, 2},
     {4, 4, 2, 2},
     {2, 2, 0, 0},
     {2, 2, 0, 0}},
    {{6, 6, 6, 6, 6, 1},
     {5, 5, 5, 5, 2, 1},
     {5, 4, 4, 3, 2, 1},
     {5, 4, 3, 2, 2, 1},
     {5, 4, 1, 1, 1, 1},
     {5, 0, 0, 0, 0, 0}},
    {{6, 5, 5, 5, 5, 5},
     {6, 5, 5, 5, 2, 0},
     {6, 4, 4, 3, 2, 0},
     {6, 4, 3, 2, 2, 0},
     {6, 4, 1, 1, 1, 0},
     {1, 1, 1, 1, 1, 0}},
    {{6, 6, 6, 6, 2, 2},
     {6, 6, 6, 6, 2, 2},
     {4, 4, 4, 3, 2, 2},
     {4, 4, 3, 2, 2, 2},
     {4, 4, 0, 0, 0, 0},
     {4, 4, 0, 0, 0, 0}},
    {{6, 6, 6, 6, 6, 1},
     {5, 5, 4, 4, 4, 1},
     {5, 5, 4, 3, 1, 1},
     {5, 5, 3, 2, 1, 1},
     {5, 2, 2, 2, 1, 1},
     {5, 0, 0, 0, 0, 0}},
    {{6, 5, 5, 5, 5, 5},
     {6, 5, 4, 4, 4, 0},
     {6, 5, 4, 3, 1, 0},
     {6, 5, 3, 2, 1, 0},
     {6, 2, 2, 2, 1, 0},
     {1, 1, 1, 1, 1, 0}},
    {{6, 6, 4, 4, 4, 4},
     {6, 6, 4, 4, 4, 4},
     {6, 6, 4, 3, 0, 0},
     {6, 6, 3, 2, 0, 0},
     {2, 2, 2, 2, 0, 0},
     {2, 2, 2, 2, 0, 0}},
    {{6, 6, 6, 6, 6, 1},
     {5, 5, 5, 3, 3, 1},
     {5, 5, 5, 3, 3, 1},
     {5, 3, 3, 1, 1, 1},
     {5, 3, 3, 1, 1, 1},
     {5, 0, 0, 0, 0, 0}},
    {{6, 5, 5, 5, 5, 5},
     {6, 5, 5, 3, 3, 0},
     {6, 5, 5, 3, 3, 0},
     {6, 3, 3, 1, 1, 0},
     {6, 3, 3, 1, 1, 0},
     {1, 1, 1, 1, 1, 0}},
    {{6, 6, 6, 3, 3, 3},
     {6, 6, 6, 3, 3, 3},
     {6, 6, 6, 3, 3, 3},
     {3, 3, 3, 0, 0, 0},
     {3, 3, 3, 0, 0, 0},
     {3, 3, 3, 0, 0, 0}},
};

inline const Edges cssc_tree_edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 10}, {3, 11}, {3, 12}};

inline const std::vector<H> tssc_graph = {
    {{6, 6, 6, 3, 3, 3},
     {6, 6, 6, 3, 3, 3},
     {6, 6, 6, 3, 3, 3},
     {3, 3, 3, 0, 0, 0},
     {3, 3, 3, 0, 0, 0},
     {3, 3, 3, 0, 0, 0}},
    {{6, 6, 6, 4, 3, 3},
     {6, 6, 6, 3, 3, 3},
     {6, 6, 5, 3, 3, 2},
     {4, 3, 3, 1, 0, 0},
     {3, 3, 3, 0, 0, 0},
     {3, 3, 2, 0, 0, 0}},
    {{6, 6, 6, 4, 3, 3},
     {6, 6, 6, 4, 3, 3},
     {6, 6, 4, 3, 2, 2},
     {4, 4, 3, 2, 0, 0},
     {3, 3, 2, 0, 0, 0},
     {3, 3, 2, 0, 0, 0}},
    {{6, 6, 6, 5, 4, 3},
     {6, 6, 5, 3, 3, 2},
     {6, 5, 5, 3, 3, 1},
     {5, 3, 3, 1, 1, 0},
     {4, 3, 3, 1, 0, 0},
     {3, 2, 1, 0, 0, 0}},
    {{6, 6, 6, 5, 4, 3},
     {6, 6, 5, 4, 3, 2},
     {6, 5, 4, 3, 2, 1},
     {5, 4, 3, 2, 1, 0},
     {4, 3, 2, 1, 0, 0},
     {3, 2, 1, 0, 0, 0}},
    {{6, 6, 6, 5, 5, 3},
     {6, 5, 5, 3, 3, 1},
     {6, 5, 5, 3, 3, 1},
     {5, 3, 3, 1, 1, 0},
     {5, 3, 3, 1, 1, 0},
     {3, 1, 1, 0, 0, 0}},
    {{6, 6, 6, 5, 5, 3},
     {6, 5, 5, 4, 3, 1},
     {6, 5, 4, 3, 2, 1},
     {5, 4, 3, 2, 1, 0},
     {5, 3, 2, 1, 1, 0},
     {3, 1, 1, 0, 0, 0}},
};

inline const Edges tssc_graph_edges1 = {{0, 1}, {1, 2}, {3, 4}, {3, 5}, {4, 6}, {5, 6}};

inline const Edges tssc_graph_edges2 = {{1, 3}, {2, 4}};

inline const H tssc_mandatory_r5 = {{10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {10, 9, 9, 9, 9, 5, 5, 5, 5, 1},
     {10, 9, 8, 8, 8, 5, 5, 5, 2, 1},
     {10, 9, 8, 7, 7, 5, 5, 3, 2, 1},
     {10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0},
     {5, 5, 5, 5, 4, 0, 0, 0, 0, 0},
     {5, 5, 5, 3, 3, 0, 0, 0, 0, 0},
     {5, 5, 2, 2, 2, 0, 0, 0, 0, 0},
     {5, 1, 1, 1, 1, 0, 0, 0, 0, 0}};

inline const H tssc_diameter_left = {{10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {10, 10, 10, 10, 10, 5, 5, 5, 5, 5},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0},
     {5, 5, 5, 5, 5, 0, 0, 0, 0, 0}};

inline const H tssc_diameter_right = {{10, 10, 10, 10, 10, 9, 9, 9, 9, 5},
     {10, 9, 9, 9, 9, 8, 8, 8, 5, 1},
     {10, 9, 8, 8, 8, 7, 7, 5, 2, 1},
     {10, 9, 8, 7, 7, 6, 5, 3, 2, 1},
     {10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
     {9, 8, 7, 6, 5, 4, 3, 2, 1, 0},
     {9, 8, 7, 5, 4, 3, 3, 2, 1, 0},
     {9, 8, 5, 3, 3, 2, 2, 2, 1, 0},
     {9, 5, 2, 2, 2, 1, 1, 1, 1, 0},
     {5, 1, 1, 1, 1, 0, 0, 0, 0, 0}};

inline const H tssc_center_r3 = {{6, 6, 6, 5, 4, 3},
     {6, 6, 5, 3, 3, 2},
     {6, 5, 5, 3, 3, 1},
     {5, 3, 3, 1, 1, 0},
     {4, 3, 3, 1, 0, 0},
     {3, 2, 1, 0, 0, 0}};

inline const H tssc_center_r4 = {{8, 8, 8, 8, 7, 6, 5, 4},
     {8, 8, 8, 7, 5, 4, 4, 3},
     {8, 8, 7, 7, 4, 4, 4, 2},
     {8, 7, 7, 6, 4, 4, 3, 1},
     {7, 5, 4, 4, 2, 1, 1, 0},
     {6, 4, 4, 4, 1, 1, 0, 0},
     {5, 4, 4, 3, 1, 0, 0, 0},
     {4, 3, 2, 1, 0, 0, 0, 0}};

inline const std::vector<H> tssc_center_r5 = {
    {{10, 10, 10, 10, 10, 9, 8, 7, 6, 5},
     {10, 10, 10, 10, 9, 8, 6, 6, 5, 4},
     {10, 10, 10, 9, 8, 5, 5, 5, 4, 3},
     {10, 10, 9, 9, 8, 5, 5, 5, 4, 2},
     {10, 9, 8, 8, 8, 5, 5, 5, 2, 1},
     {9, 8, 5, 5, 5, 2, 2, 2, 1, 0},
     {8, 6, 5, 5, 5, 2, 1, 1, 0, 0},
     {7, 6, 5, 5, 5, 2, 1, 0, 0, 0},
     {6, 5, 4, 4, 2, 1, 0, 0, 0, 0},
     {5, 4, 3, 2, 1, 0, 0, 0, 0, 0}},
    {{10, 10, 10, 10, 10, 9, 8, 8, 6, 5},
     {10, 10, 10, 10, 9, 7, 6, 5, 5, 4},
     {10, 10, 9, 9, 9, 6, 5, 5, 5, 2},
     {10, 10, 9, 9, 8, 5, 5, 5, 4, 2},
     {10, 9, 9, 8, 7, 5, 5, 4, 3, 1},
     {9, 7, 6, 5, 5, 3, 2, 1, 1, 0},
     {8, 6, 5, 5, 5, 2, 1, 1, 0, 0},
     {8, 5, 5, 5, 4, 1, 1, 1, 0, 0},
     {6, 5, 5, 4, 3, 1, 0, 0, 0, 0},
     {5, 4, 2, 2, 1, 0, 0, 0, 0, 0}},
    {{10, 10, 10, 10, 10, 8, 8, 8, 5, 5},
     {10, 10, 10, 10, 10, 8, 6, 6, 5, 5},
     {10, 10, 9, 9, 8, 6, 5, 5, 4, 2},
     {10, 10, 9, 9, 8, 5, 5, 5, 4, 2},
     {10, 10, 8, 8, 7, 5, 5, 4, 2, 2},
     {8, 8, 6, 5, 5, 3, 2, 2, 0, 0},
     {8, 6, 5, 5, 5, 2, 1, 1, 0, 0},
     {8, 6, 5, 5, 4, 2, 1, 1, 0, 0},
     {5, 5, 4, 4, 2, 0, 0, 0, 0, 0},
     {5, 5, 2, 2, 2, 0, 0, 0, 0, 0}},
    {{10, 10, 10, 10, 10, 9, 8, 8, 6, 5},
     {10, 10, 10, 10, 9, 7, 7, 5, 5, 4},
     {10, 10, 9, 9, 9, 5, 5, 5, 5, 2},
     {10, 10, 9, 8, 8, 5, 5, 5, 3, 2},
     {10, 9, 9, 8, 8, 5, 5, 5, 3, 1},
     {9, 7, 5, 5, 5, 2, 2, 1, 1, 0},
     {8, 7, 5, 5, 5, 2, 2, 1, 0, 0},
     {8, 5, 5, 5, 5, 1, 1, 1, 0, 0},
     {6, 5, 5, 3, 3, 1, 0, 0, 0, 0},
     {5, 4, 2, 2, 1, 0, 0, 0, 0, 0}},
    {{10, 10, 10, 10, 10, 8, 8, 8, 5, 5},
     {10, 10, 10, 10, 10, 8, 7, 6, 5, 5},
     {10, 10, 9, 9, 8, 5, 5, 5, 4, 2},
     {10, 10, 9, 8, 8, 5, 5, 5, 3, 2},
     {10, 10, 8, 8, 8, 5, 5, 5, 2, 2},
     {8, 8, 5, 5, 5, 2, 2, 2, 0, 0},
     {8, 7, 5, 5, 5, 2, 2, 1, 0, 0},
     {8, 6, 5, 5, 5, 2, 1, 1, 0, 0},
     {5, 5, 4, 3, 2, 0, 0, 0, 0, 0},
     {5, 5, 2, 2, 2, 0, 0, 0, 0, 0}},
    {{10, 10, 10, 10, 10, 8, 8, 7, 5, 5},
     {10, 10, 10, 10, 10, 8, 7, 6, 5, 5},
     {10, 10, 10, 9, 8, 6, 5, 5, 4, 3},
     {10, 10, 9, 8, 8, 5, 5, 5, 3, 2},
     {10, 10, 8, 8, 7, 5, 5, 4, 2, 2},
     {8, 8, 6, 5, 5, 3, 2, 2, 0, 0},
     {8, 7, 5, 5, 5, 2, 2, 1, 0, 0},
     {7, 6, 5, 5, 4, 2, 1, 0, 0, 0},
     {5, 5, 4, 3, 2, 0, 0, 0, 0, 0},
     {5, 5, 3, 2, 2, 0, 0, 0, 0, 0}},
    {{10, 10, 10, 10, 10, 9, 7, 6, 6, 5},
     {10, 10, 10, 10, 9, 8, 7, 6, 5, 4},
     {10, 10, 10, 10, 8, 6, 5, 5, 4, 4},
     {10, 10, 10, 8, 8, 5, 5, 5, 3, 3},
     {10, 9, 8, 8, 7, 5, 5, 4, 2, 1},
     {9, 8, 6, 5, 5, 3, 2, 2, 1, 0},
     {7, 7, 5, 5, 5, 2, 2, 0, 0, 0},
     {6, 6, 5, 5, 4, 2, 0, 0, 0, 0},
     {6, 5, 4, 3, 2, 1, 0, 0, 0, 0},
     {5, 4, 4, 3, 1, 0, 0, 0, 0, 0}},
    {{10, 10, 10, 10, 10, 9, 8, 7, 6, 5},
     {10, 10, 10, 10, 9, 7, 7, 5, 5, 4},
     {10, 10, 10, 9, 9, 6, 5, 5, 5, 3},
     {10, 10, 9, 8, 8, 5, 5, 5, 3, 2},
     {10, 9, 9, 8, 7, 5, 5, 4, 3, 1},
     {9, 7, 6, 5, 5, 3, 2, 1, 1, 0},
     {8, 7, 5, 5, 5, 2, 2, 1, 0, 0},
     {7, 5, 5, 5, 4, 1, 1, 0, 0, 0},
     {6, 5, 5, 3, 3, 1, 0, 0, 0, 0},
     {5, 4, 3, 2, 1, 0, 0, 0, 0, 0}},
};

}  // namespace fig
