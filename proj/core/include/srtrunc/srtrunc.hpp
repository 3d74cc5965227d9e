#pragma once

#include "srtrunc/betti.hpp"
#include "srtrunc/betti_table.hpp"
#include "srtrunc/bigint.hpp"
#include "srtrunc/complex.hpp"
#include "srtrunc/errors.hpp"
#include "srtrunc/homology.hpp"
#include "srtrunc/ideal.hpp"
#include "srtrunc/ideal_io.hpp"
#include "srtrunc/invariants.hpp"
#include "srtrunc/monomial.hpp"
#include "srtrunc/polarization.hpp"
#include "srtrunc/truncation.hpp"
#include "srtrunc/varset.hpp"
