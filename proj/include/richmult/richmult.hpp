#pragma once

#include "attach.hpp"
#include "chains.hpp"
#include "cli.hpp"
#include "core.hpp"
#include "grid.hpp"
#include "index_tuple.hpp"
#include "paths.hpp"
#include "report.hpp"
#include "starsets.hpp"
#include "svg.hpp"
