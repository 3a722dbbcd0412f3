#ifndef UALG_UALG_HPP
#define UALG_UALG_HPP

#include "ualg/error.hpp"
#include "ualg/tuples.hpp"
#include "ualg/finite_base.hpp"
#include "ualg/discrete_relations.hpp"
#include "ualg/continuous_relations.hpp"
#include "ualg/equivalences.hpp"
#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/speclang.hpp"

#endif // UALG_UALG_HPP
