#pragma once

#include "repknit/ar_knit.hpp"
#include "repknit/bound_quiver.hpp"
#include "repknit/checked.hpp"
#include "repknit/config.hpp"
#include "repknit/error.hpp"
#include "repknit/exact_linear.hpp"
#include "repknit/hom_engine.hpp"
#include "repknit/io.hpp"
#include "repknit/oracle.hpp"
#include "repknit/orbits.hpp"
#include "repknit/projectivization.hpp"
#include "repknit/qchar.hpp"
#include "repknit/quiver.hpp"
#include "repknit/roots.hpp"
#include "repknit/selfcheck.hpp"
