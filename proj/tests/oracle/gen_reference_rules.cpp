// Regenerates tests/fixtures/*.txt:  gen_reference_rules <fixture-dir>

#include <fstream>
#include <iostream>

#include "classical.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_reference_rules <fixture-dir>\n";
    return 1;
  }
  const std::string dir = argv[1];
  for (const auto& [family, n] : cgq::oracle::fixture_set()) {
    const auto rule = cgq::oracle::reference_rule(family, n, cgq::Precision{cgq::oracle::kFixtureBits});
    const std::string path = dir + "/" + cgq::oracle::fixture_filename(family, n);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << cgq::oracle::format_fixture(rule);
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}
