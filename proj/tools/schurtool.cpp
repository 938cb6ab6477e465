#include "schur/cli.hpp"

int main(int argc, char** argv) { return schur::run_main(argc, argv); }
