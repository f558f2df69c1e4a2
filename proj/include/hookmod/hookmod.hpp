#pragma once

// Umbrella header: exact combinatorics of the Garsia-Haiman hook modules.

#include "hookmod/bases.hpp"
#include "hookmod/combinatorics.hpp"
#include "hookmod/errors.hpp"
#include "hookmod/harmonics.hpp"
#include "hookmod/macdonald.hpp"
#include "hookmod/polyring.hpp"
#include "hookmod/qt_polynomial.hpp"
#include "hookmod/rational.hpp"
#include "hookmod/represent.hpp"
#include "hookmod/straighten.hpp"
