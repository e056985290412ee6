#pragma once

#include "vlg/aho_corasick.hpp"
#include "vlg/gap_graph.hpp"
#include "vlg/matcher.hpp"
#include "vlg/pattern.hpp"
#include "vlg/range_list.hpp"
#include "vlg/reporter.hpp"
