#include <iostream>
#include <variant>

#include <latintrade/latintrade.hpp>

using namespace latintrade;

int main() {
  const Bitrade b = example2();
  const auto tau = tau_representation(b);
  std::cout << format_tau(tau);

  const auto g = genus(tau);
  std::cout << "genus " << g.genus << " (" << g.surface_name << ")\n";

  const auto result = three_transversal_partition(b);
  if (const auto *p = std::get_if<TransversalPartition>(&result)) {
    for (const auto &c : p->classes) {
      for (const auto &e : c)
        std::cout << to_string(e) << ' ';
      std::cout << '\n';
    }
    if (!verify_partition(*p, b).ok())
      return 1;
  } else {
    return 1;
  }

  const auto drawing = lift_to_plane(b, Entry(1, 1, 1), 2.0);
  std::cout << drawing.triangles.size() << " triangles within radius 2\n";
  return drawing.conflicts.empty() ? 0 : 1;
}
