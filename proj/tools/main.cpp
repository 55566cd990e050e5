#include "tmeasure/cli.hpp"

int main(int argc, char** argv) { return tmeasure::cli::run(argc, argv); }
