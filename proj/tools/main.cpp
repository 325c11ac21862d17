#include "rlab/cli/app.hpp"

int main(int argc, char** argv) { return rlab::cli::run(argc, argv); }
