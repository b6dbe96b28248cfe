// Learns the West-2-stack-sortable basis from the class members of length
// at most five and prints it before and after pruning.

#include <iostream>

#include "bisc/bisc.hpp"

int main() {
  const auto members = bisc::gen_west2(5);
  const auto raw = bisc::bisc(members, 4);
  std::cout << "raw basis (" << raw.size() << " patterns):\n" << bisc::render_text(raw);

  const auto pruned = bisc::prune(raw, members, raw.N);
  std::cout << "pruned:\n" << bisc::render_text(pruned);
  for (const auto& mp : pruned.patterns) std::cout << '\n' << bisc::render_ascii(mp);

  const auto check = bisc::verify_equality(bisc::gen_west2(7), pruned, 7);
  std::cout << "\nagrees with the sorting machine up to length 7: "
            << (check ? "yes" : "no") << '\n';
  return check ? 0 : 1;
}
