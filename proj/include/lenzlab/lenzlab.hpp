#ifndef LENZLAB_LENZLAB_HPP
#define LENZLAB_LENZLAB_HPP

#include "lenzlab/angles.hpp"
#include "lenzlab/assignment.hpp"
#include "lenzlab/bigfloat.hpp"
#include "lenzlab/closed_forms.hpp"
#include "lenzlab/constructions.hpp"
#include "lenzlab/digraph.hpp"
#include "lenzlab/distance.hpp"
#include "lenzlab/embed.hpp"
#include "lenzlab/errors.hpp"
#include "lenzlab/ext_scalar.hpp"
#include "lenzlab/fit.hpp"
#include "lenzlab/io.hpp"
#include "lenzlab/lenz_system.hpp"
#include "lenzlab/optimal.hpp"
#include "lenzlab/parallel.hpp"
#include "lenzlab/point.hpp"
#include "lenzlab/point_set.hpp"
#include "lenzlab/rational.hpp"
#include "lenzlab/search.hpp"
#include "lenzlab/verify.hpp"

#endif
