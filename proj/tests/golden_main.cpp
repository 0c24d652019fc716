#include <iostream>
#include <string>

#include "golden.hpp"

// golden_check <corpus dir> [--regen]
int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: golden_check <corpus dir> [--regen]\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  if (argc > 2 && std::string(argv[2]) == "--regen") {
    std::cout << "regenerated " << satlab::golden::regenerate(dir) << " cases\n";
    return 0;
  }
  const auto cases = satlab::golden::load_corpus(dir).size();
  auto bad = satlab::golden::check_corpus(dir);
  std::size_t values = 0;
  for (auto& m : satlab::golden::check_roundtrips(dir, values)) bad.push_back(std::move(m));
  for (const auto& m : bad) std::cout << "FAIL " << m.name << ": " << m.what << "\n";
  std::cout << cases << " cases, " << values << " round trips, " << bad.size() << " failures\n";
  return bad.empty() ? 0 : 1;
}
