#include "latfree/catalog.hpp"

namespace latfree {

// Planar figures with one interior lattice point (suffix 1) and with the two
// interior points (1,0), (2,0) (suffix 2). Counts come from a separate
// brute-force script; the i = 1 classes were checked against the polygon
// search, the i = 2 ones against the width-2 searches.
const std::vector<FigureRecord>& figure_records() {
  static const std::vector<FigureRecord> records = {
      {"Fig-quad1-1", {{1, 0}, {0, 1}, {1, 1}, {-1, -1}}, 1, 4, 2, "arrow conv{e1, e2, +-(e1+e2)}"},
      {"Fig-quad1-2", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 1, 4, 2, "diamond conv{+-e1, +-e2}"},
      {"Fig-quad1-3", {{0, 0}, {0, 1}, {1, 0}, {2, 3}}, 1, 5, 2, ""},
      {"Fig-quad1-4", {{0, 0}, {0, 1}, {2, 0}, {2, 2}}, 1, 6, 2, ""},
      {"Fig-quad1-5", {{0, 0}, {0, 1}, {1, 0}, {3, 4}}, 1, 7, 2, ""},
      {"Fig-quad1-6", {{0, 0}, {0, 1}, {2, 0}, {2, 3}}, 1, 8, 2, ""},
      {"Fig-quad1-7", {{0, 0}, {0, 2}, {2, 0}, {2, 2}}, 1, 8, 2, "square [0,2]^2"},
      {"Fig-tria1-1", {{0, 0}, {0, 2}, {3, 0}}, 1, 6, 2, ""},
      {"Fig-tria1-2", {{0, 0}, {0, 2}, {4, 0}}, 1, 8, 2, ""},
      {"Fig-tria1-3", {{1, 0}, {-1, 0}, {0, 2}}, 1, 4, 2, "sail conv{+-e1, 2e2}"},
      {"Fig-tria1-4", {{0, 0}, {0, 3}, {3, 0}}, 1, 9, 3, ""},
      {"Fig-tria1-5", {{1, 0}, {0, 1}, {-1, -1}}, 1, 3, 2, "kite conv{e1, e2, -(e1+e2)}"},
      {"Fig-pent1-1", {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}}, 1, 5, 2, ""},
      {"Fig-pent1-2", {{0, 0}, {0, 1}, {1, 0}, {2, 2}, {2, 3}}, 1, 6, 2, ""},
      {"Fig-pent1-3", {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {3, 2}}, 1, 7, 2, ""},
      {"Fig-hex1-1", {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}}, 1, 6, 2, ""},
      {"Fig-quad2-1", {{0, 0}, {3, 0}, {0, 1}, {1, -1}}, 2, 4, 2, ""},
      {"Fig-quad2-2", {{0, 0}, {3, 0}, {0, 1}, {2, -1}}, 2, 4, 2, ""},
      {"Fig-quad2-3", {{0, 0}, {3, 0}, {0, 1}, {3, -1}}, 2, 4, 2, ""},
      {"Fig-quad2-4", {{0, 0}, {0, 1}, {5, -1}, {4, -1}}, 2, 4, 2, ""},
      {"Fig-quad2-5", {{0, 0}, {0, 1}, {3, -1}, {5, -1}}, 2, 5, 2, ""},
      {"Fig-quad2-6", {{0, 0}, {0, 1}, {5, -1}, {6, -1}}, 2, 5, 2, ""},
      {"Fig-quad2-7", {{0, 1}, {1, 1}, {4, -1}, {1, -1}}, 2, 6, 2, ""},
      {"Fig-quad2-8", {{0, 0}, {0, 1}, {5, -1}, {2, -1}}, 2, 6, 2, ""},
      {"Fig-quad2-9", {{0, 0}, {0, 1}, {6, -1}, {4, -1}}, 2, 6, 2, ""},
      {"Fig-quad2-10", {{0, 1}, {2, 1}, {3, -1}, {1, -1}}, 2, 6, 2, ""},
      {"Fig-tria2-1", {{0, 0}, {0, 1}, {5, -1}}, 2, 3, 2, ""},
      {"Fig-tria2-2", {{0, 0}, {0, 1}, {6, -1}}, 2, 4, 2, ""},
      {"Fig-tria2-3", {{0, 1}, {4, 1}, {1, -1}}, 2, 6, 2, ""},
  };
  return records;
}

}  // namespace latfree
