#include "vlg/cli.hpp"

int main(int argc, char** argv) { return vlg::cli::run(argc, argv); }
