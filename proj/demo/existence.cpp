// Builds a hyperfield of every order 2..30 and prints how it was obtained.
#include <iostream>

#include "krasner/krasner.hpp"

int main() {
  using namespace krasner;
  for (int n = 2; n <= 30; ++n) {
    const auto h = hyperfield_of_order(n);
    const auto f = factor_integer(n);
    std::cout << "n=" << n << "  ";
    if (f.size() == 1) {
      std::cout << "massouros GF(" << f[0].p << "^" << f[0].k << ")";
    } else {
      std::cout << "quotient GF(" << smallest_prime_one_mod(n - 1) << ")/G, |G|="
                << (smallest_prime_one_mod(n - 1) - 1) / (n - 1);
    }
    std::cout << "  " << (verify(h.table()).passed() ? "verified" : "FAILED") << '\n';
  }
}
