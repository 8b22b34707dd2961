#include "output.hpp"

#include <fstream>
#include <iostream>

#include "halfspin/error.hpp"
#include "halfspin/format.hpp"

namespace halfspin::cli {

Json json_real(double value) { return std::stod(format_real(value)); }

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (!path || path->empty() || *path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot open output file " + *path);
  out << text;
}

void report_error(std::string_view code, std::string_view message) {
  std::string line(message);
  for (char& c : line) {
    if (c == '\n') c = ' ';
  }
  std::cerr << "error: " << code << ": " << line << '\n';
}

}  // namespace halfspin::cli
