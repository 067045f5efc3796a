#pragma once

// Exact-arithmetic toolkit for the polytope C_n of spin correlation matrices:
// vertex and Bell-system enumeration, membership and realizability by certified
// rational LP feasibility, the n=3 tetrahedron barycentric transform, brute-force
// facet enumeration, and the n>=5 search for Bell-satisfying non-members.

#include "spinpoly/bell.hpp"
#include "spinpoly/correlation.hpp"
#include "spinpoly/distribution.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/feasibility.hpp"
#include "spinpoly/geometry.hpp"
#include "spinpoly/io.hpp"
#include "spinpoly/linalg.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/sampling.hpp"
#include "spinpoly/sign_vector.hpp"
#include "spinpoly/tetrahedron.hpp"
