#ifndef ARRFREE_ARRFREE_HPP
#define ARRFREE_ARRFREE_HPP

// Exact-arithmetic toolkit for freeness of central hyperplane
// arrangements over Q and F_p, including Groebner bases over Z,
// minimal free resolutions, intersection lattices, and the
// characteristic-p transfer criteria.

#include "arrfree/arrangement.hpp"
#include "arrfree/betti.hpp"
#include "arrfree/builtins.hpp"
#include "arrfree/coeff.hpp"
#include "arrfree/errors.hpp"
#include "arrfree/json_io.hpp"
#include "arrfree/lattice.hpp"
#include "arrfree/module_gb.hpp"
#include "arrfree/monomial.hpp"
#include "arrfree/polynomial.hpp"
#include "arrfree/prime_util.hpp"
#include "arrfree/text.hpp"
#include "arrfree/transfer.hpp"
#include "arrfree/zz_groebner.hpp"

#endif
