#pragma once

#include "btt/costmap.hpp"
#include "btt/geometry.hpp"
#include "btt/graph.hpp"
#include "btt/oracle.hpp"
#include "btt/planner.hpp"
#include "btt/scenario.hpp"
