#pragma once

#include "orbdet/determinant.hpp"
#include "orbdet/dihedral.hpp"
#include "orbdet/figure.hpp"
#include "orbdet/harness.hpp"
#include "orbdet/matrix.hpp"
#include "orbdet/orbit.hpp"
#include "orbdet/permutation.hpp"
#include "orbdet/rectify.hpp"
#include "orbdet/scalar.hpp"
#include "orbdet/structured.hpp"
#include "orbdet/svg.hpp"
