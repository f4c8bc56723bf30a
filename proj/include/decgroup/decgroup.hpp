#ifndef DECGROUP_DECGROUP_HPP
#define DECGROUP_DECGROUP_HPP

#include "dec.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "perm.hpp"
#include "points.hpp"
#include "polynomial.hpp"
#include "quotient.hpp"
#include "radical.hpp"
#include "rational.hpp"
#include "triangular.hpp"
#include "univariate.hpp"

#endif  // DECGROUP_DECGROUP_HPP
