#pragma once

#include "dirichlet/arith_func.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/factorize.hpp"
#include "dirichlet/ideals.hpp"
#include "dirichlet/sampling.hpp"
#include "dirichlet/scalar.hpp"
#include "dirichlet/sequence_io.hpp"
#include "dirichlet/structure.hpp"
#include "dirichlet/verify.hpp"
#include "dirichlet/witness.hpp"
#include "dirichlet/zoo.hpp"
