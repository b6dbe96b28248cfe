#pragma once

#include "bisc/permutation.hpp"
#include "bisc/mesh.hpp"
#include "bisc/hitting_set.hpp"
#include "bisc/mine.hpp"
#include "bisc/gen.hpp"
#include "bisc/pipeline.hpp"
#include "bisc/classes.hpp"
#include "bisc/io.hpp"
