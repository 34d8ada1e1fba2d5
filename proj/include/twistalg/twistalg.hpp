#pragma once

#include "errors.hpp"
#include "scalars.hpp"
#include "linalg.hpp"
#include "lie.hpp"
#include "pbw.hpp"
#include "uea.hpp"
#include "cochain.hpp"
#include "random.hpp"
#include "twist.hpp"
#include "geom.hpp"
#include "rmatrix.hpp"
#include "crossedprod.hpp"
#include "serialize.hpp"
#include "acceptance.hpp"
