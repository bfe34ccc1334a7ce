// crsg - algebraic geometry over finite completely regular semigroups
//
// Convenience header including the whole library.

#ifndef CRSG_CRSG_HPP_
#define CRSG_CRSG_HPP_

#include "algebraic.hpp"
#include "catalog.hpp"
#include "clone.hpp"
#include "exception.hpp"
#include "io.hpp"
#include "lemmas.hpp"
#include "point-set.hpp"
#include "rees.hpp"
#include "semigroup.hpp"
#include "structure.hpp"
#include "term.hpp"
#include "theorem2.hpp"

#endif  // CRSG_CRSG_HPP_
