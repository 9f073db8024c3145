#pragma once

#include "zerograph/graph.hpp"

namespace fixture {

using zerograph::OrientedGraph;
using zerograph::UndirectedGraph;

inline OrientedGraph triangle() {
  return OrientedGraph::from_ids({"1", "2", "3"},
                                 {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
}

inline OrientedGraph single_arc() { return OrientedGraph::from_ids({"1", "2"}, {{"a", "1", "2"}}); }

inline UndirectedGraph edge() { return UndirectedGraph::from_ids({"1", "2"}, {{"a", "1", "2"}}); }

inline UndirectedGraph p3() {
  return UndirectedGraph::from_ids({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
}

inline UndirectedGraph utriangle() {
  return UndirectedGraph::from_ids({"1", "2", "3"},
                                   {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
}

inline UndirectedGraph empty3() { return UndirectedGraph::from_ids({"1", "2", "3"}, {}); }

}  // namespace fixture
