#pragma once
// Umbrella header.

#include "polycfg/acceptance.hpp"
#include "polycfg/celestial.hpp"
#include "polycfg/configuration.hpp"
#include "polycfg/enumerate.hpp"
#include "polycfg/families.hpp"
#include "polycfg/geometry_checks.hpp"
#include "polycfg/io.hpp"
#include "polycfg/report.hpp"
#include "polycfg/scene.hpp"
#include "polycfg/solver.hpp"
#include "polycfg/svg.hpp"
#include "polycfg/synthetic.hpp"
