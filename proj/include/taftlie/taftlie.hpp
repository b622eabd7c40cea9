#pragma once

#include "taftlie/cyclotomic.hpp"
#include "taftlie/matrix.hpp"
#include "taftlie/liealg.hpp"
#include "taftlie/hopf.hpp"
#include "taftlie/hmod.hpp"
#include "taftlie/construct.hpp"
#include "taftlie/classify.hpp"
#include "taftlie/codim.hpp"
#include "taftlie/json_io.hpp"
