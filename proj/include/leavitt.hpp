// Umbrella header for the leavitt library.
#ifndef LEAVITT_HPP_
#define LEAVITT_HPP_

#include "leavitt/algebra.hpp"
#include "leavitt/element.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/linalg.hpp"
#include "leavitt/monomial.hpp"
#include "leavitt/morphisms.hpp"
#include "leavitt/oracle.hpp"
#include "leavitt/pullback.hpp"
#include "leavitt/rewrite.hpp"
#include "leavitt/scalar.hpp"
#include "leavitt/text.hpp"

#endif  // LEAVITT_HPP_
