#pragma once

#include "latentid/classify.hpp"
#include "latentid/error.hpp"
#include "latentid/graph.hpp"
#include "latentid/identify.hpp"
#include "latentid/loglinear.hpp"
#include "latentid/model_file.hpp"
#include "latentid/node_set.hpp"
#include "latentid/numeric.hpp"
#include "latentid/singular.hpp"
