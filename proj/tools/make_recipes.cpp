// Regenerates the shipped recipe files: make_recipes <dir> [n_max]
#include <iostream>
#include <string>

#include "forge/codec.hpp"
#include "forge/family.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_recipes <dir> [n_max]\n";
    return 2;
  }
  std::string dir = argv[1];
  int n_max = argc > 2 ? std::stoi(argv[2]) : 46;
  for (int n = 14; n <= n_max; ++n) {
    forge::BuildRecipe r = forge::recipe_for(n);
    forge::write_file_atomic(dir + "/t" + std::to_string(n) + ".recipe",
                             forge::recipe_to_text(r));
    std::cout << "t" << n << ".recipe hash " << forge::recipe_hash(r) << "\n";
  }
  return 0;
}
