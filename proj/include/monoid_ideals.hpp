// Everything except the command-line front end (monoid_ideals/cli.hpp),
// which additionally needs CLI11.

#ifndef MONOID_IDEALS_HPP_
#define MONOID_IDEALS_HPP_

#include "monoid_ideals/ball.hpp"
#include "monoid_ideals/catalog.hpp"
#include "monoid_ideals/claims.hpp"
#include "monoid_ideals/constructions.hpp"
#include "monoid_ideals/element_set.hpp"
#include "monoid_ideals/engine.hpp"
#include "monoid_ideals/errors.hpp"
#include "monoid_ideals/factor_search.hpp"
#include "monoid_ideals/finite_monoid.hpp"
#include "monoid_ideals/free_monoid.hpp"
#include "monoid_ideals/generators.hpp"
#include "monoid_ideals/ideal_enumeration.hpp"
#include "monoid_ideals/ideal_set.hpp"
#include "monoid_ideals/io.hpp"
#include "monoid_ideals/morphism.hpp"
#include "monoid_ideals/predicates.hpp"
#include "monoid_ideals/presented_monoid.hpp"
#include "monoid_ideals/product_machine.hpp"
#include "monoid_ideals/report.hpp"
#include "monoid_ideals/rewriting.hpp"
#include "monoid_ideals/topology.hpp"
#include "monoid_ideals/verdict.hpp"
#include "monoid_ideals/word.hpp"

#endif  // MONOID_IDEALS_HPP_
