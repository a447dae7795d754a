#include "extremes/decide.hpp"

#include "extremes/bridge.hpp"
#include "extremes/product.hpp"

namespace extremes {

std::string_view to_string(Route r) {
  switch (r) {
    case Route::Flat: return "flat";
    case Route::Indexed: return "indexed";
    case Route::Product: return "product";
    case Route::Logic: return "logic";
  }
  return "";
}

Route route(const Statement& s) {
  if (!s.is_set()) return Route::Logic;
  if (contains_product(s)) return Route::Product;
  if (contains_family(s)) return Route::Indexed;
  return Route::Flat;
}

Verdict decide(const Statement& s, const DecideOptions& options) {
  switch (route(s)) {
    case Route::Flat: return decide_flat(s, options.engine);
    case Route::Indexed: return decide_indexed(s, options.dyadic_bound, options.engine);
    case Route::Product: return decide_product(s, options.engine);
    case Route::Logic: return decide_taut(s, options.dyadic_bound, options.engine);
  }
  return decide_flat(s, options.engine);
}

}  // namespace extremes
