#pragma once

#include "sigample/ampleness/oracle.hpp"
#include "sigample/engine/sigma_engine.hpp"
#include "sigample/error.hpp"
#include "sigample/exact/integer_matrix.hpp"
#include "sigample/exact/rational_poly.hpp"
#include "sigample/exact/real_roots.hpp"
#include "sigample/exact/scalar.hpp"
#include "sigample/exact/spectral.hpp"
#include "sigample/lattice/lattice.hpp"
#include "sigample/lattice/symmetric_form.hpp"
#include "sigample/numpoly/numerical_polynomial.hpp"
