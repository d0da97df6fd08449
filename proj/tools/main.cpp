#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  file << text;
  return static_cast<bool>(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mukai lattice, wall and moduli analyzer"};
  std::string input_path = "-";
  std::string output_path;
  mukai::cli::Options options;
  app.add_option("-i,--input", input_path, "input document (\"-\" for standard input)");
  app.add_option("-o,--output", output_path, "write the report (or the SVG for plot-cone) to this file");
  app.add_option("-c,--command", options.command, "command; overrides the document's \"command\" field")
      ->check(CLI::IsMember(mukai::cli::command_names()));
  if (mukai::cli::oracle_available())
    app.add_flag("--oracle", options.oracle, "cross-check enumerations against brute force");
  CLI11_PARSE(app, argc, argv);

  std::string input;
  if (input_path == "-") {
    input.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(input_path, std::ios::binary);
    if (!file) {
      std::cerr << "{\n  \"error\": {\n    \"class\": \"io\",\n    \"message\": \"cannot read " << input_path
                << "\",\n    \"path\": null\n  }\n}\n";
      return mukai::cli::Parse;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    input = buffer.str();
  }

  const mukai::cli::Result result = mukai::cli::run_command(input, options);
  if (result.exit_code != mukai::cli::Ok) {
    std::cerr << result.err;
    return result.exit_code;
  }
  if (!result.svg.empty()) {
    if (output_path.empty()) {
      std::cout << result.svg;
      return 0;
    }
    if (!write_file(output_path, result.svg)) {
      std::cerr << "cannot write " << output_path << "\n";
      return mukai::cli::Internal;
    }
    std::cout << result.out;
    return 0;
  }
  if (output_path.empty()) {
    std::cout << result.out;
  } else if (!write_file(output_path, result.out)) {
    std::cerr << "cannot write " << output_path << "\n";
    return mukai::cli::Internal;
  }
  return 0;
}
