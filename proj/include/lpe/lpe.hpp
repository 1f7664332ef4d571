#pragma once

// Umbrella header.

#include "lpe/asymptotic.hpp"
#include "lpe/checks.hpp"
#include "lpe/concave.hpp"
#include "lpe/instances.hpp"
#include "lpe/lp.hpp"
#include "lpe/planar.hpp"
#include "lpe/polytope.hpp"
#include "lpe/radical.hpp"
#include "lpe/rational.hpp"
#include "lpe/region.hpp"
#include "lpe/report.hpp"
#include "lpe/serialize.hpp"
#include "lpe/suite.hpp"
#include "lpe/volume.hpp"
