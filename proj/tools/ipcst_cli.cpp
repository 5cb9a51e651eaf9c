#include "cli_app.hpp"

int main(int argc, char** argv) { return ipcst::cli::run(argc, argv); }
