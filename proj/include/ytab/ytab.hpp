#pragma once

#include "aq.hpp"
#include "bijections.hpp"
#include "cde.hpp"
#include "count.hpp"
#include "diagram.hpp"
#include "enumerate.hpp"
#include "hyper.hpp"
#include "interval.hpp"
#include "mpoly.hpp"
#include "partition.hpp"
#include "polyaq.hpp"
#include "polyq.hpp"
#include "qseries.hpp"
#include "qverify.hpp"
#include "rational.hpp"
#include "shapes.hpp"
#include "tableau.hpp"
#include "uncrowd.hpp"
