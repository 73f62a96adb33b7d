// Builds the three levels for n = 3, their permutation-invariant counterparts, and prints sizes and a DOT diagram.
#include <iostream>
#include <memory>

#include "ptk/intpart.hpp"
#include "ptk/order/coarsen.hpp"
#include "ptk/order/lattice.hpp"
#include "ptk/setpart.hpp"

int main() {
  using namespace ptk;
  const int n = 3;
  auto p1 = std::make_shared<const order::Poset<setpart::SetPartition>>(setpart::refinement_poset(n));
  auto p2 = order::ideal_lattice(p1);
  auto p3 = order::filter_lattice(p2);
  std::cout << "P_I(3): " << p1->size() << "  P_II(3): " << p2->size() << "  P_III(3): " << p3->size() << '\n';

  auto c = order::coarsen(*p1, setpart::type_of);
  auto q2 = order::ideal_lattice(c.image);
  std::cout << "barred: " << c.image->size() << ", " << q2->size() << ", " << order::filter_lattice(q2)->size() << '\n';

  for (const auto& a : p2->elements()) std::cout << "  " << to_label(a) << "  ->  " << to_label(order::elementwise_image(c, a)) << '\n';

  std::cout << order::to_dot(intpart::refinement_poset(5), "P_I_bar_5");
}
