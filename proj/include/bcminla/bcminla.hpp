#pragma once

#include <bcminla/bc_graph.hpp>
#include <bcminla/common.hpp>
#include <bcminla/construction_tree.hpp>
#include <bcminla/exact.hpp>
#include <bcminla/families.hpp>
#include <bcminla/graph.hpp>
#include <bcminla/io.hpp>
#include <bcminla/isoperimetric.hpp>
#include <bcminla/layout.hpp>
