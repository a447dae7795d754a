#pragma once

// One entry point that sends a statement to the right decider.

#include <string_view>

#include "extremes/ast.hpp"
#include "extremes/engine.hpp"
#include "extremes/model.hpp"

namespace extremes {

enum class Route { Flat, Indexed, Product, Logic };

std::string_view to_string(Route r);

Route route(const Statement& s);

struct DecideOptions {
  unsigned dyadic_bound = kDefaultDyadicBound;
  EngineOptions engine;
};

// flat -> decide_flat, indexed -> decide_indexed, product -> decide_product,
// logical -> decide_taut.
Verdict decide(const Statement& s, const DecideOptions& options = {});

}  // namespace extremes
