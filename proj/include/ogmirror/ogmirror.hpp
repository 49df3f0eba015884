#pragma once

#include "ogmirror/diagram.hpp"
#include "ogmirror/dot.hpp"
#include "ogmirror/polynomial.hpp"
#include "ogmirror/potential.hpp"
#include "ogmirror/torus.hpp"
#include "ogmirror/verify.hpp"
