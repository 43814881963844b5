#pragma once

#include "padom/vertex_set.hpp"
#include "padom/error.hpp"
#include "padom/graph.hpp"
#include "padom/io.hpp"
#include "padom/families.hpp"
#include "padom/enumerate.hpp"
#include "padom/domination.hpp"
#include "padom/path_addition.hpp"
#include "padom/oracle.hpp"
#include "padom/verify.hpp"
