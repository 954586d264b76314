#include "chowform/fixtures.hpp"

namespace chowform {

namespace {

// Six-node quiver on the lattice with rows (1,1,0,-1,-1,0), (0,1,1,0,-1,-1).
// Edge orientations are the unique assignment making every 2-cell an oriented
// cycle; with them every B_st(z_e) equals +1. The epsilons block is the
// reference compatible assignment for this model.
const char* const kDp3 = R"json({
  "name": "dp3",
  "lattice": {
    "rows": [[1, 1, 0, -1, -1, 0], [0, 1, 1, 0, -1, -1]]
  },
  "quiver": {
    "nodes": 6,
    "edges": [
      {"id": 1,  "s": 2, "t": 3, "black": 1, "white": 1},
      {"id": 2,  "s": 5, "t": 6, "black": 1, "white": 1},
      {"id": 3,  "s": 1, "t": 2, "black": 1, "white": 2},
      {"id": 4,  "s": 4, "t": 5, "black": 1, "white": 2},
      {"id": 5,  "s": 3, "t": 4, "black": 1, "white": 3},
      {"id": 6,  "s": 6, "t": 1, "black": 1, "white": 3},
      {"id": 7,  "s": 6, "t": 2, "black": 2, "white": 1},
      {"id": 8,  "s": 2, "t": 4, "black": 2, "white": 2},
      {"id": 9,  "s": 4, "t": 6, "black": 2, "white": 3},
      {"id": 10, "s": 3, "t": 5, "black": 3, "white": 1},
      {"id": 11, "s": 5, "t": 1, "black": 3, "white": 2},
      {"id": 12, "s": 1, "t": 3, "black": 3, "white": 3}
    ]
  },
  "epsilons": {
    "black": {
      "1": [0, 0, 0, 0, 0, 0],
      "2": [0, 0, -1, 0, 0, 1],
      "3": [0, -1, 0, 0, 1, 0]
    },
    "white": {
      "1": [0, -1, -1, 0, 0, 0],
      "2": [-1, -1, 0, 0, 0, 0],
      "3": [0, 0, -1, -1, 0, 0]
    }
  },
  "points": {
    "ones": [1, 1, 1, 1, 1, 1]
  },
  "facets": [
    "+ 1 * u1",
    "+ 1 * u2",
    "+ 1 * u3",
    "+ 1 * u4",
    "+ 1 * u5",
    "+ 1 * u6",
    "+ 1 * u1 u2 - 1 * u4 u5",
    "+ 1 * u3 u4 - 1 * u1 u6",
    "+ 1 * u5 u6 - 1 * u2 u3"
  ]
})json";

// Minimal instance: the 3-cycle quiver with one black and one white cell on
// the lattice with rows (1,-1,0), (0,1,-1).
const char* const kTriangle = R"json({
  "name": "triangle",
  "lattice": {
    "rows": [[1, -1, 0], [0, 1, -1]]
  },
  "quiver": {
    "nodes": 3,
    "edges": [
      {"id": 1, "s": 1, "t": 2, "black": 1, "white": 1},
      {"id": 2, "s": 2, "t": 3, "black": 1, "white": 1},
      {"id": 3, "s": 3, "t": 1, "black": 1, "white": 1}
    ]
  },
  "points": {
    "ones": [1, 1, 1]
  }
})json";

} // namespace

std::string fixture_json(const std::string& name) {
    if (name == "dp3")
        return kDp3;
    if (name == "triangle")
        return kTriangle;
    return "";
}

std::vector<std::string> fixture_names() {
    return {"dp3", "triangle"};
}

} // namespace chowform
