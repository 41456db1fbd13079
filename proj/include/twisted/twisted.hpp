#pragma once

// Umbrella header.

#include "twisted/rational.hpp"
#include "twisted/errors.hpp"
#include "twisted/torus_values.hpp"
#include "twisted/finite_groups.hpp"
#include "twisted/bihomomorphism.hpp"
#include "twisted/multipliers.hpp"
#include "twisted/algebra_element.hpp"
#include "twisted/regularity.hpp"
#include "twisted/twisted_algebra.hpp"
#include "twisted/integer_lattice.hpp"
#include "twisted/lattice_families.hpp"
#include "twisted/sampled_validation.hpp"
#include "twisted/direct_products.hpp"
#include "twisted/free_products.hpp"
#include "twisted/json_io.hpp"
