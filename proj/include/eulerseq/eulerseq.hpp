#pragma once

// Euler-quotient binary threshold sequences: generation, defining pair and
// trace representation over GF(2^N), and linear complexity analysis.

#include "arith.hpp"
#include "defining.hpp"
#include "gf2.hpp"
#include "json_io.hpp"
#include "lincomp.hpp"
#include "quotients.hpp"
#include "sequences.hpp"
#include "verify.hpp"
