#pragma once

// Translation between set statements and logical formulas.
//
// Sets to logic: each set Y becomes the atom "the generic point lies in Y"
// (named y), union/intersection/complement become or/and/not, A \ B becomes
// a /\ ~b, indexed union/intersection become exists/forall, and the
// statement's = and <= become <-> and ->.
//
// Logic to sets: the reverse, with p -> q written as P' | Q. A formula is a
// tautology iff its translation equals the universe under every extreme
// assignment; a top-level <-> is emitted as an equality of its two sides.
//
// Names map by toggling the case of the first letter (A <-> a, Xs <-> xs),
// which is a bijection between the two identifier classes.

#include <string>

#include "extremes/ast.hpp"
#include "extremes/engine.hpp"
#include "extremes/model.hpp"

namespace extremes {

std::string atom_name_for(const std::string& set_name);
std::string set_name_for(const std::string& atom_name);

// Throws UnsupportedError for logical statements and for products.
PropExpr set_to_logic(const Statement& s);
PropExpr set_to_logic(const SetExpr& e);

Statement logic_to_set(const PropExpr& p);
// Taut or PropEquiv.
Statement logic_to_set(const Statement& s);
SetExpr logic_term_to_set(const PropExpr& p);

// Decides the set translation with decide_flat or decide_indexed; the
// witness is reported in terms of the original atoms.
Verdict decide_taut(const PropExpr& p, unsigned dyadic_bound = kDefaultDyadicBound,
                    const EngineOptions& options = {});
Verdict decide_taut(const Statement& s, unsigned dyadic_bound = kDefaultDyadicBound,
                    const EngineOptions& options = {});

}  // namespace extremes
