// Lists the hyperfields of a small order up to isomorphism.
//   demo_classify [n]   (default 4)
#include <cstdlib>
#include <iostream>

#include "krasner/krasner.hpp"

int main(int argc, char** argv) {
  using namespace krasner;
  const int n = argc > 1 ? std::atoi(argv[1]) : 4;
  SearchOptions options;
  options.jobs = 2;
  const auto result = enumerate_hyperfields(n, options);
  std::cout << result.classes.size() << " hyperfields of order " << n << " ("
            << result.progress.scanned << " one-row maps scanned)\n";
  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    std::cout << "\n#" << i + 1 << "  " << fingerprint(result.classes[i]).to_string() << "\n\n";
    std::cout << pretty_table(result.classes[i].table());
  }
}
