#pragma once

#include "error.hpp"
#include "partition.hpp"
#include "core_quotient.hpp"
#include "parity.hpp"
#include "cover_class.hpp"
#include "ranked_tree.hpp"
#include "macdonald_tree.hpp"
#include "hooks_pascal.hpp"
#include "fibonacci_poset.hpp"
#include "checks.hpp"
