#include "cli_app.hpp"

int main(int argc, char** argv) { return sqmirror::cli::run(argc, argv); }
