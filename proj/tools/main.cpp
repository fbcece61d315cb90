#include "qhci/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qhci::run(argc, argv, std::cout, std::cerr); }
