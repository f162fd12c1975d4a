#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

enum class Family { Petersen, Flower, Blanusa1, Blanusa2, Cube };

struct FamilyGraph {
    Graph graph;
    Family family;
    int parameter = 0; // m for Flower, d for Cube
    std::vector<std::string> target_classes;
};

FamilyGraph petersen();
FamilyGraph flower(int m);
FamilyGraph blanusa1();
FamilyGraph blanusa2();
FamilyGraph cube(int d);

// "petersen", "flower-5" / "J5", "blanusa-1" / "B1", "blanusa-2" / "B2", "cube-3" / "Q3".
// Throws UnknownLabel for names that are not a family.
FamilyGraph family_by_name(std::string_view name);
bool is_family_name(std::string_view name);

// v_-2, x_0, ...
std::string flower_label(char letter, int index);

bool is_cubic(const Graph& g);
// edge-deletion connectivity test
bool is_bridgeless(const Graph& g);

} // namespace pebbling
