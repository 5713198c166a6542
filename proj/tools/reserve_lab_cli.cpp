#include "reserve_lab/cli.hpp"

int main(int argc, char** argv) { return reserve_lab::cli::main_entry(argc, argv); }
