// Classifies a few states by their finest product structure and evaluates k-property correlations.
#include <cmath>
#include <iomanip>
#include <iostream>

#include "ptk/quantum/io.hpp"
#include "ptk/quantum/measures.hpp"

int main() {
  using namespace ptk;
  for (const char* src : {"zero:4", "bell*bell", "ghz:4", "w:3*zero:1", "random:4:7"}) {
    auto r = quantum::load_state(src);
    auto finest = quantum::finest_product_structure(r);
    std::cout << std::left << std::setw(12) << src << " finest " << setpart::to_string(finest) << "  type "
              << intpart::to_set_string(setpart::type_of(finest)) << '\n';
    for (int k = 1; k <= r.sites(); ++k)
      std::cout << "    k=" << k << "  C_part=" << std::fixed << std::setprecision(4) << quantum::corr_kpart(r, k).value / std::log(2.0)
                << "  C_prod=" << quantum::corr_kprod(r, k).value / std::log(2.0) << " bits\n";
  }
}
