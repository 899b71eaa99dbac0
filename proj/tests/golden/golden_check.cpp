// Copyright 2026 The weakgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstring>
#include <fstream>
#include <iostream>

#include "golden.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: golden_check <golden-dir> [--update]\n";
    return 2;
  }
  const std::string dir = argv[1];
  const bool update = argc > 2 && std::strcmp(argv[2], "--update") == 0;
  try {
    if (update) {
      for (const auto& c : weakgeom::golden::load_commands(dir)) {
        std::ofstream(weakgeom::golden::fixture_path(dir, c), std::ios::binary) << weakgeom::golden::render(c);
      }
      std::cout << "fixtures updated\n";
      return 0;
    }
    const auto o = weakgeom::golden::check_all(dir);
    for (const auto& name : o.mismatched) std::cout << "MISMATCH " << name << "\n";
    std::cout << (o.total - o.mismatched.size()) << "/" << o.total << " fixtures match\n";
    return o.mismatched.empty() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
