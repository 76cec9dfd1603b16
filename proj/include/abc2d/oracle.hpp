#pragma once

#include "abc2d/quadrature.hpp"
#include "abc2d/shooting.hpp"
