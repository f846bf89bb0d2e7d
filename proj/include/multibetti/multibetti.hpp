#pragma once

#include "multibetti/alexander.hpp"
#include "multibetti/bounds.hpp"
#include "multibetti/degree.hpp"
#include "multibetti/errors.hpp"
#include "multibetti/field.hpp"
#include "multibetti/genex.hpp"
#include "multibetti/graded.hpp"
#include "multibetti/json_io.hpp"
#include "multibetti/koszul.hpp"
#include "multibetti/matrix.hpp"
#include "multibetti/matroid.hpp"
#include "multibetti/parallel.hpp"
#include "multibetti/presentation.hpp"
#include "multibetti/subset.hpp"
#include "multibetti/version.hpp"
