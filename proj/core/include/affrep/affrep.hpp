#pragma once

#include "affrep/affcount.hpp"
#include "affrep/error.hpp"
#include "affrep/exactpoly.hpp"
#include "affrep/finitefield.hpp"
#include "affrep/geomstrat.hpp"
#include "affrep/katz.hpp"
#include "affrep/tqft.hpp"
