#pragma once

#include "errors.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "symplectic_labels.hpp"
#include "number_theory.hpp"
#include "galois_field.hpp"
#include "fq_poly.hpp"
#include "ffpoly.hpp"
#include "orbits.hpp"
#include "blocks.hpp"
#include "bijection.hpp"
