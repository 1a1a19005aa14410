// Command-line driver: check, flatten, graph and dump over .tpc files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tpc/tpc.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tpc::Error(tpc::ErrorKind::Internal, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw tpc::Error(tpc::ErrorKind::Internal, "cannot write " + out_path);
  out << text;
}

tpc::Elaboration load(const std::string& path) {
  tpc::Module m = tpc::parse_module(read_file(path));
  return tpc::elaborate(m);
}

int report_user_error(const std::string& path, const tpc::Error& e) {
  std::cerr << path << ":" << e.line << ":" << e.col << ": " << e.what() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* collation = std::getenv("TPC_COLLATION")) {
    if (std::string(collation) != "codepoint") {
      std::cerr << "TPC_COLLATION supports only 'codepoint'\n";
      return 1;
    }
  }

  CLI::App app{"theory presentation combinators"};
  app.require_subcommand(1);

  std::string input, output, target, format = "text";

  CLI::App* check = app.add_subcommand("check", "parse, type-check and elaborate a module");
  check->add_option("file", input, "input .tpc module")->required();

  CLI::App* flatten = app.add_subcommand("flatten", "print a definition as a flat theory");
  flatten->add_option("file", input)->required();
  flatten->add_option("--target", target, "definition to flatten")->required();
  flatten->add_option("-o", output, "write to a file instead of stdout");

  CLI::App* graph = app.add_subcommand("graph", "emit the theory graph");
  graph->add_option("file", input)->required();
  graph->add_option("--format", format, "text or dot")->check(CLI::IsMember({"text", "dot"}));
  graph->add_option("-o", output);

  CLI::App* dump = app.add_subcommand("dump", "structured dump of every definition");
  dump->add_option("file", input)->required();
  dump->add_option("-o", output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      load(input);
      return 0;
    }
    if (flatten->parsed()) {
      tpc::Elaboration el = load(input);
      const tpc::EnvEntry* entry = el.env.find(tpc::Name(target));
      if (!entry) {
        std::cerr << input << ": no definition named `" << target << "`\n";
        return 1;
      }
      if (!entry->result || !entry->result->as_theory) {
        std::cerr << input << ": `" << target
                  << "` has no theory denotation (SpecificationError)\n";
        return 1;
      }
      write_output(tpc::flatten_text(*entry->result->as_theory), output);
      return 0;
    }
    if (graph->parsed()) {
      tpc::Elaboration el = load(input);
      write_output(format == "dot" ? tpc::graph_dot(el.graph) : tpc::graph_text(el.graph),
                   output);
      return 0;
    }
    if (dump->parsed()) {
      tpc::Elaboration el = load(input);
      write_output(tpc::dump_text(el), output);
      return 0;
    }
  } catch (const tpc::Error& e) {
    if (e.kind == tpc::ErrorKind::Internal) {
      std::cerr << input << ": internal error: " << e.what() << "\n";
      return 2;
    }
    return report_user_error(input, e);
  } catch (const std::exception& e) {
    std::cerr << input << ": internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
