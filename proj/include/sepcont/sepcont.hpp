#pragma once

#include "sepcont/rational.hpp"
#include "sepcont/enumeration.hpp"
#include "sepcont/pairing.hpp"
#include "sepcont/cross.hpp"
#include "sepcont/weave.hpp"
#include "sepcont/report.hpp"
#include "sepcont/verify.hpp"
#include "sepcont/grid.hpp"
