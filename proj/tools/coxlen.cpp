#include "coxlen/cli.hpp"

int main(int argc, char** argv) { return coxlen::cli::run(argc, argv); }
