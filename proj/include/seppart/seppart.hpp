#pragma once

#include "seppart/basis.hpp"
#include "seppart/bijection.hpp"
#include "seppart/class_spec.hpp"
#include "seppart/coefficient.hpp"
#include "seppart/enumerate.hpp"
#include "seppart/error.hpp"
#include "seppart/gaussian.hpp"
#include "seppart/gfunctions.hpp"
#include "seppart/identities.hpp"
#include "seppart/overpartition.hpp"
#include "seppart/report.hpp"
#include "seppart/series.hpp"
