#pragma once

// Everything in one include.

#include "deltabound/cert_io.hpp"
#include "deltabound/cones.hpp"
#include "deltabound/delpezzo.hpp"
#include "deltabound/delta_cert.hpp"
#include "deltabound/fano_db.hpp"
#include "deltabound/heights.hpp"
#include "deltabound/lattice.hpp"
#include "deltabound/linear_program.hpp"
#include "deltabound/pell.hpp"
#include "deltabound/polynomial.hpp"
#include "deltabound/rational.hpp"
