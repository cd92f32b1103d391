#ifndef EULERCC_EULERCC_HPP
#define EULERCC_EULERCC_HPP

#include "errors.hpp"
#include "rational.hpp"
#include "linalg.hpp"
#include "functions.hpp"
#include "complex.hpp"
#include "constructible.hpp"
#include "charcycle.hpp"
#include "morse.hpp"
#include "fixtures.hpp"
#include "json_io.hpp"
#include "intersect.hpp"

#endif // EULERCC_EULERCC_HPP
