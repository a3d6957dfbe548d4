// Everything at once.
#pragma once

#include "arith.hpp"
#include "polyring.hpp"
#include "linalg.hpp"
#include "modpoly.hpp"
#include "lattice.hpp"
#include "cyclonorm.hpp"
#include "numberfield.hpp"
#include "goodbad.hpp"
#include "constructions.hpp"
#include "membership.hpp"
#include "search.hpp"
#include "properties.hpp"
#include "io.hpp"
#include "acceptance.hpp"
