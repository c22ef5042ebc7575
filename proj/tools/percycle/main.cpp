#include <iostream>

#include "percycle/pipeline.hpp"

int main(int argc, char** argv) {
  return percycle::cli::dispatch(argc, argv, std::cout, std::cerr);
}
