#pragma once

#include "mcres/error.hpp"
#include "mcres/rational.hpp"
#include "mcres/monomial.hpp"
#include "mcres/element.hpp"
#include "mcres/text.hpp"
#include "mcres/semigroup.hpp"
#include "mcres/groebner.hpp"
#include "mcres/toric.hpp"
#include "mcres/graded_map.hpp"
#include "mcres/resolution.hpp"
#include "mcres/patil.hpp"
#include "mcres/closed_form.hpp"
#include "mcres/report.hpp"
