#include "cli_app.hpp"

int main(int argc, char** argv) { return citerank::cli::run(argc, argv); }
