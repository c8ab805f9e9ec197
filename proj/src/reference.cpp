#include "scflip/reference.hpp"

namespace scflip::reference {

std::vector<std::vector<std::vector<int>>> tssc_center(int r) {
    switch (r) {
        case 1: return {{{2, 1}, {1, 0}}};
        case 3: return {{{6, 6, 6, 5, 4, 3},
                         {6, 6, 5, 3, 3, 2},
                         {6, 5, 5, 3, 3, 1},
                         {5, 3, 3, 1, 1, 0},
                         {4, 3, 3, 1, 0, 0},
                         {3, 2, 1, 0, 0, 0}}};
        case 4: return {{{8, 8, 8, 8, 7, 6, 5, 4},
                         {8, 8, 8, 7, 5, 4, 4, 3},
                         {8, 8, 7, 7, 4, 4, 4, 2},
                         {8, 7, 7, 6, 4, 4, 3, 1},
                         {7, 5, 4, 4, 2, 1, 1, 0},
                         {6, 4, 4, 4, 1, 1, 0, 0},
                         {5, 4, 4, 3, 1, 0, 0, 0},
                         {4, 3, 2, 1, 0, 0, 0, 0}}};
        case 5: return {
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
        default: return {};
    }
}

}  // namespace scflip::reference
