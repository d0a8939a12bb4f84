#ifndef PC2_PC2_HPP
#define PC2_PC2_HPP

#include "builtin_series.hpp"
#include "cache.hpp"
#include "closed_forms.hpp"
#include "combinatorics.hpp"
#include "conjecture.hpp"
#include "convolution.hpp"
#include "parallel.hpp"
#include "poly_cauchy.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "series.hpp"
#include "stirling.hpp"
#include "verify.hpp"

#endif  // PC2_PC2_HPP
