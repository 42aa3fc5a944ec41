#pragma once

#include "unipotent_lab/numeric.hpp"
#include "unipotent_lab/matrix.hpp"
#include "unipotent_lab/linalg.hpp"
#include "unipotent_lab/subspace.hpp"
#include "unipotent_lab/presentation.hpp"
#include "unipotent_lab/series.hpp"
#include "unipotent_lab/magnus.hpp"
#include "unipotent_lab/hall_basis.hpp"
#include "unipotent_lab/free_lie.hpp"
#include "unipotent_lab/lie_subspace.hpp"
#include "unipotent_lab/crossed_module.hpp"
#include "unipotent_lab/analysis.hpp"
