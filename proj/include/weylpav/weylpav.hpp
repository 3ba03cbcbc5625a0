#pragma once

#include "weylpav/centralizer.hpp"
#include "weylpav/errors.hpp"
#include "weylpav/exactmat/elimination.hpp"
#include "weylpav/exactmat/matrix.hpp"
#include "weylpav/exactmat/smith.hpp"
#include "weylpav/ppav.hpp"
#include "weylpav/rootsys.hpp"
#include "weylpav/symplectic.hpp"
#include "weylpav/weyl.hpp"
