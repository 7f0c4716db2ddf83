#include "normqr/cli.hpp"

int main(int argc, char** argv) { return normqr::cli_main(argc, argv); }
