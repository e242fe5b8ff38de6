#include <iostream>
#include <string>
#include <vector>

#include "monoid_ideals/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto const result = monoid_ideals::execute(std::move(args));
  std::cout << result.output;
  if (result.document.is_object() && !result.document["error"].is_null()) {
    std::cerr << "monoid-ideals: " << result.document["error"]["code"].get<std::string>() << ": "
              << result.document["error"]["detail"].get<std::string>() << "\n";
  }
  return result.exit_code;
}
