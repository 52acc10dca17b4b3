#pragma once

#include "edd/graph.hpp"

namespace edd {

// 10-node benchmark scenario: 14 links, 7 destinations, gamma 20, 1-hop
// vendor limit.  Optimal cost is 2*gamma + 5.
inline EddInstance paper10_instance() {
  Graph g(10, {{1, 4},
               {1, 10},
               {2, 3},
               {2, 4},
               {2, 8},
               {3, 5},
               {3, 9},
               {4, 9},
               {5, 6},
               {5, 9},
               {5, 10},
               {6, 8},
               {7, 8},
               {7, 10}});
  return EddInstance(std::move(g), {2, 3, 4, 5, 6, 8, 9}, 20.0, 1);
}

// 9-node scenario used to illustrate the hop limit: 11 links, 2-hop limit.
inline EddInstance fig3_instance() {
  Graph g(9, {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 8}, {4, 6}, {4, 8}, {5, 6}, {6, 7}, {7, 9}, {8, 9}});
  return EddInstance(std::move(g), {1, 2, 3, 4, 5, 6, 8}, 20.0, 2);
}

}  // namespace edd
