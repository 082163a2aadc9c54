#pragma once

#include "bidlab/bid.hpp"
#include "bidlab/construction_a.hpp"
#include "bidlab/errors.hpp"
#include "bidlab/exponent.hpp"
#include "bidlab/ideal.hpp"
#include "bidlab/km_ring.hpp"
#include "bidlab/krull_even.hpp"
#include "bidlab/linear_algebra.hpp"
#include "bidlab/monoid.hpp"
#include "bidlab/parallel.hpp"
#include "bidlab/polynomial.hpp"
#include "bidlab/properties.hpp"
#include "bidlab/rational.hpp"
#include "bidlab/rational_function.hpp"
#include "bidlab/report.hpp"
#include "bidlab/rif.hpp"
#include "bidlab/ring_spec.hpp"
