#pragma once

#include "canon/counting.hpp"
#include "canon/errors.hpp"
#include "canon/word.hpp"
#include "canon/pattern.hpp"
#include "canon/dyck.hpp"
#include "canon/nonnesting.hpp"
#include "canon/grid.hpp"
#include "canon/poly.hpp"
#include "canon/families.hpp"
#include "canon/bijections/peaks.hpp"
#include "canon/bijections/flips.hpp"
#include "canon/bijections/removal.hpp"
#include "canon/bijections/symmetry.hpp"
#include "canon/generalizations.hpp"
#include "canon/identities.hpp"
#include "canon/svg.hpp"
