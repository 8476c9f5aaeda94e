// binom: decompose binomial ideals from a session file.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "binom/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Radical, cellular and primary decomposition of binomial ideals"};
  std::string path = "-";
  std::string order = "degrevlex";
  binom::RunOptions opt;
  app.add_option("file", path, "session file, or '-' for stdin");
  app.add_flag("--json", opt.json, "emit canonical JSON");
  app.add_flag("--verify", opt.verify, "re-check intersections and primary certificates");
  app.add_option("--order", order, "term order")->check(CLI::IsMember({"lex", "degrevlex"}));
  app.add_option("--max-escalation", opt.decompose.max_escalation, "bound on exponent doubling loops")
      ->check(CLI::Range(1, 64));
  app.add_flag("--parallel", opt.decompose.parallel, "work on cells and primes concurrently");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "binom: cannot read " << path << "\n";
      return 1;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  auto kind = order == "lex" ? binom::MonomialOrder::Kind::Lex : binom::MonomialOrder::Kind::DegRevLex;
  binom::Report rep = binom::run_text(text, opt, kind);
  std::cout << rep.output;
  if (rep.exit_code != 0) std::cerr << "binom: " << rep.error << "\n";
  return rep.exit_code;
}
