#include <convexiq_cli/commands.hpp>

#include <iostream>

int main(int argc, char** argv) {
  convexiq::cli::Context ctx{std::cout, std::cerr};
  return convexiq::cli::run(argc, argv, ctx);
}
