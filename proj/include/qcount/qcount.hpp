#pragma once

#include "qcount/errors.hpp"
#include "qcount/ffield.hpp"
#include "qcount/inclexcl.hpp"
#include "qcount/partitions.hpp"
#include "qcount/perms.hpp"
#include "qcount/qcoeff.hpp"
#include "qcount/qpoly.hpp"
#include "qcount/subspaces.hpp"
#include "qcount/verify.hpp"
