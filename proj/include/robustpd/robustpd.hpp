#ifndef ROBUSTPD_ROBUSTPD_HPP
#define ROBUSTPD_ROBUSTPD_HPP

#include "robustpd/bipartite.hpp"
#include "robustpd/blocks.hpp"
#include "robustpd/error.hpp"
#include "robustpd/families.hpp"
#include "robustpd/graph.hpp"
#include "robustpd/multiset.hpp"
#include "robustpd/overlap.hpp"
#include "robustpd/pd.hpp"
#include "robustpd/record.hpp"
#include "robustpd/robust.hpp"
#include "robustpd/search.hpp"
#include "robustpd/table.hpp"
#include "robustpd/vertex_set.hpp"

#endif
