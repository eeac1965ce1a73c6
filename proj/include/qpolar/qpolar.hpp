#pragma once

#include "qpolar/cmatrix.hpp"
#include "qpolar/fock_algebra.hpp"
#include "qpolar/qnumerics.hpp"
#include "qpolar/verifier.hpp"
