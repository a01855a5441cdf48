// A short walk through the library: build codes, check them, compare with bounds.

#include <iostream>

#include "boxcode/bounds.hpp"
#include "boxcode/canonical.hpp"
#include "boxcode/constructions.hpp"
#include "boxcode/covering.hpp"
#include "boxcode/io.hpp"
#include "boxcode/search.hpp"

using namespace boxcode;

int main() {
  const BoxCode three = BoxCode::from_strings(2, {"011", "11*", "*0*"});
  const Parameters p = three.parameters();
  std::cout << "three words: n=" << to_string(p.n) << " M=" << p.M << " d=" << *p.d << " eta=" << p.eta << '\n';

  const Covering h = from_box_code(three);
  std::cout << "as a covering of K_3 (capacity " << h.capacity() << "):\n";
  write_covering(std::cout, h);

  const Constructed chain = chain_code(5);
  std::cout << "\nchain code, 5 levels: n=" << to_string(chain.code.length())
            << " perfect=" << is_perfect(chain.code, 0).perfect << '\n'
            << to_boxcode_text(chain.code);

  const Constructed np = construction_np1cc_builtin8();
  std::cout << "\nfrom the length-8 covering code: " << np.code.size() << " words, n=" << to_string(np.code.length())
            << ", d=" << *np.code.min_distance() << ", perfect at r=1: " << is_perfect(np.code, 1).perfect << '\n';

  const SearchResult best = exact_min_length(3, 1, 2, 3);
  std::cout << "\nshortest 3-word code with d=1: n=" << to_string(best.n) << ", equivalent to the chain code of 2 levels: "
            << equivalent(*best.witness, chain_code(2).code) << '\n';

  std::cout << "\nlower bounds for M=1024, d=3:\n";
  for (const auto& row : bound_table(1024, 3, 2))
    if (row.value) std::cout << "  " << row.name << ' ' << *row.value << '\n';
}
