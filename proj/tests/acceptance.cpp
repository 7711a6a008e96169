#include <iostream>

#include "torelli/acceptance.hpp"

int main() {
  const auto results = torelli::acceptance::run_all(std::cout);
  return torelli::acceptance::report(results, std::cout);
}
