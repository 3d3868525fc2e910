#pragma once

#include "protoric/core.hpp"
#include "protoric/dual_semigroup.hpp"
#include "protoric/fan.hpp"
#include "protoric/fan_io.hpp"
#include "protoric/homogeneous.hpp"
#include "protoric/kring.hpp"
#include "protoric/lattice.hpp"
#include "protoric/moment.hpp"
#include "protoric/profinite.hpp"
#include "protoric/quotient.hpp"
#include "protoric/report.hpp"
