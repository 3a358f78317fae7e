#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = sl3web::cli::run(args, std::cin);
  if (result.out_path.empty()) std::cout << result.payload;
  return result.exit_code;
}
