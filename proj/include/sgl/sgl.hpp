#pragma once

#include "sgl/catalog.hpp"
#include "sgl/engine.hpp"
#include "sgl/epi.hpp"
#include "sgl/errors.hpp"
#include "sgl/expr.hpp"
#include "sgl/frattini.hpp"
#include "sgl/group.hpp"
#include "sgl/hom.hpp"
#include "sgl/limits.hpp"
#include "sgl/oracle.hpp"
#include "sgl/report.hpp"
#include "sgl/subgroup.hpp"
